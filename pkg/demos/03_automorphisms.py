"""Automorphisms of the extension: shifts by 1-cocycles and lifted outer maps."""
from cocycle_forge.extgrp import (
    aut_structure_check,
    class_action_scalar,
    full_pipeline,
    lift_with_scalar,
    pgl_frobenius_pairs,
    scalar_isomorphism,
)

res = full_pipeline(4, 3)
E = res.E

pairs = pgl_frobenius_pairs(res.spec, res.L, res.dec)
for pr in pairs:
    lam = class_action_scalar(E, pr.nu, pr.mu)
    F, c = lift_with_scalar(E, pr.nu, pr.mu)
    print(f"{pr.label:10s} moves [tau] by {lam}; lifted with mu scaled by {c}: {F.verify(samples=10**5)}")

# Frobenius negates the class, so its lift uses -mu

S = scalar_isomorphism(E, 2)
print("E_tau ~ E_2tau:", S.verify())

rep = aut_structure_check(res)
for key in ("W_order", "induced_group_order", "kernel_order", "constructed_lower_bound", "cited_upper_bound"):
    print(f"{key}: {rep[key]}")
