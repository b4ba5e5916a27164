"""Explicit cohomology and nonsplit extensions V . PSL2(q) over F_p."""

import os

# must happen before numpy loads its BLAS
_threads = os.environ.get("COCYCLE_FORGE_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

from .gf import FieldElement, FieldSpec, field_of_order, make_field  # noqa: E402
from .pgroup import GroupTable, pgl2, point_stabilizer, psl2, validate_qp  # noqa: E402
from .modrep import ModuleRep, decompose_P, is_irreducible, permutation_module, trivial_module  # noqa: E402
from .cohom import Cochain1, Cocycle2, h1, h2, is_coboundary, shapiro_induce  # noqa: E402
from .extgrp import (  # noqa: E402
    AutRecord,
    ExtGroup,
    aut_structure_check,
    build_extension,
    compatible_pair_lift,
    full_pipeline,
    scalar_isomorphism,
    uniqueness_check,
    z1_shift,
)

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "field_of_order",
    "make_field",
    "GroupTable",
    "pgl2",
    "point_stabilizer",
    "psl2",
    "validate_qp",
    "ModuleRep",
    "decompose_P",
    "is_irreducible",
    "permutation_module",
    "trivial_module",
    "Cochain1",
    "Cocycle2",
    "h1",
    "h2",
    "is_coboundary",
    "shapiro_induce",
    "AutRecord",
    "ExtGroup",
    "aut_structure_check",
    "build_extension",
    "compatible_pair_lift",
    "full_pipeline",
    "scalar_isomorphism",
    "uniqueness_check",
    "z1_shift",
]
