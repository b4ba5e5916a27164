import itertools

import numpy as np
import pytest

from cocycle_forge import fplin
from cocycle_forge.gf import field_of_order
from cocycle_forge.modrep import (
    ModuleRep,
    brauer_char_check,
    decompose_P,
    fixed_points,
    is_irreducible,
    p_prime_part,
    permutation_module,
    spin,
    spin_basis,
    trivial_module,
)
from cocycle_forge.pgroup import psl2

MATRIX = [(4, 3), (7, 3), (13, 3), (16, 3), (16, 5)]


def test_permutation_module_q4(s43):
    P = s43.P
    assert P.dim == 5
    for X in P.matrices[:: 7]:
        assert set(np.unique(X)) <= {0, 1}
        assert np.all(X.sum(axis=0) == 1) and np.all(X.sum(axis=1) == 1)
    assert np.array_equal(P.matrices[0], np.eye(5))
    assert P.check_representation()


def test_decomposition_maps(s43):
    dec, p = s43.dec, 3
    assert dec.V.dim == 4 and dec.I.dim == 1
    ones = np.ones((1, 5), dtype=int)
    assert not fplin.matmul_mod(ones, dec.project_V, p).any()
    e01 = np.array([[1, p - 1, 0, 0, 0]])
    assert not fplin.matmul_mod(e01, dec.project_I, p).any()
    # embed then project is the identity on each summand
    assert np.array_equal(fplin.matmul_mod(dec.embed_V, dec.project_V, p), np.eye(4))
    assert np.array_equal(fplin.matmul_mod(dec.embed_I, dec.project_I, p), np.eye(1))
    # the two idempotents of P
    eI = fplin.matmul_mod(dec.project_I, dec.embed_I, p)
    eV = fplin.matmul_mod(dec.project_V, dec.embed_V, p)
    assert np.array_equal(fplin.matmul_mod(eI, eI, p), eI)
    assert np.array_equal(fplin.matmul_mod(eV, eV, p), eV)
    assert not fplin.matmul_mod(eI, eV, p).any()
    assert np.array_equal((eI.astype(int) + eV) % p, np.eye(5))
    for X in s43.P.generator_matrices:
        assert np.array_equal(fplin.matmul_mod(eV, X, p), fplin.matmul_mod(X, eV, p))
        assert np.array_equal(fplin.matmul_mod(eI, X, p), fplin.matmul_mod(X, eI, p))


def test_v_is_a_representation(s43):
    assert s43.V.check_representation()


def test_v_matches_restriction(s43):
    for g in [1, 10, 59]:
        assert np.array_equal(s43.dec.restrict_to_V(s43.L.perms[g]), s43.V.matrices[g])


def test_fixed_points(s43):
    assert len(fixed_points(s43.IL)) == 1
    assert len(fixed_points(s43.V)) == 0
    assert len(fixed_points(s43.P)) == 1


@pytest.mark.parametrize("q,p", MATRIX)
def test_fixed_points_matrix(q, p):
    L = psl2(field_of_order(q))
    P = permutation_module(L, p)
    V = decompose_P(P).V
    assert len(fixed_points(V)) == 0
    assert len(fixed_points(P)) == 1


def test_spin(s43):
    V = s43.V
    assert spin(V, np.zeros(4, dtype=int)) == 0
    assert spin(s43.IL, [2]) == 1
    assert spin(V, [1, 0, 0, 0]) == 4


def test_spin_order_invariant(s73):
    V = s73.V
    rng = np.random.default_rng(0)
    v = rng.integers(0, 3, V.dim)
    rev = ModuleRep(V.group, 3, V.generator_matrices[::-1])
    assert np.array_equal(spin_basis(V, v), spin_basis(rev, v))
    # fewer generators can only give a smaller submodule
    sub = ModuleRep(V.group, 3, V.generator_matrices)
    sub.generator_matrices = V.generator_matrices[:1]
    assert spin(sub, v) <= spin(V, v)


def test_irreducibility(s43, s73):
    assert is_irreducible(s43.IL)
    assert not is_irreducible(s43.P)
    assert is_irreducible(s43.V, certificate=True) == (True, "exhaustive")
    assert is_irreducible(s73.V, certificate=True) == (True, "exhaustive")
    ok, mode = is_irreducible(s43.P, certificate=True)
    assert not ok and mode == "witness"
    assert is_irreducible(s73.V, cap=10, certificate=True) == (True, "sampled")


def test_json_roundtrip(s43):
    V2 = ModuleRep.from_json(s43.V.to_json(), s43.L)
    assert np.array_equal(V2.matrices, s43.V.matrices)


def test_wrong_generator_count(s43):
    with pytest.raises(ValueError):
        ModuleRep(s43.L, 3, [np.eye(2)])


def test_p_divides_dim():
    L = psl2(field_of_order(4))
    with pytest.raises(ValueError):
        decompose_P(permutation_module(L, 5))


def test_p_prime_part():
    assert p_prime_part(6, 3) == 2 and p_prime_part(9, 3) == 1 and p_prime_part(10, 3) == 10


def test_brauer_q4(s43):
    rows = {r["class"]: r for r in brauer_char_check(s43.V, s43.L)}
    assert rows["1a"]["fixed_points"] == 5 and rows["1a"]["value"] == 4
    assert rows["2a"]["fixed_points"] == 1 and rows["2a"]["value"] == 0
    assert rows["y"]["order"] == 5 and rows["y"]["fixed_points"] == 0 and rows["y"]["value"] == -1
    assert all(r["pass"] for r in rows.values())


def test_brauer_q7(s73):
    rows = {r["class"]: r for r in brauer_char_check(s73.V, s73.L)}
    assert rows["1a"]["value"] == 7
    assert rows["2a"]["value"] == -1
    assert rows["y"]["order"] == 4 and rows["y"]["value"] == -1
    assert rows["x"]["value"] == 1
    assert all(r["pass"] for r in rows.values())


@pytest.mark.parametrize("q,p", [(13, 3), (16, 3), (16, 5), (11, 5)])
def test_brauer_trace_agrees(q, p):
    L = psl2(field_of_order(q))
    V = decompose_P(permutation_module(L, p)).V
    for r in brauer_char_check(V, L):
        assert r["trace_mod_p"] == r["value"] % p
        if r["class"] != "2a":
            assert r["pass"], r


def test_trivial_module(s43):
    I = trivial_module(s43.L, 3, dim=2)
    assert I.dim == 2 and all(np.array_equal(X, np.eye(2)) for X in I.matrices[:5])


def test_scalar_pairs_preserve_submodules(s43):
    # spin is invariant under nonzero scalars
    for v in itertools.islice(itertools.product(range(3), repeat=4), 1, 20):
        v = np.array(v)
        assert spin(s43.V, v) == spin(s43.V, 2 * v % 3)
