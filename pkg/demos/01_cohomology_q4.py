"""Cohomology of PSL2(4) acting on the 4-dimensional module V over F_3.

Run: python demos/01_cohomology_q4.py
"""
import numpy as np

from cocycle_forge.cohom import h1, h2
from cocycle_forge.gf import field_of_order
from cocycle_forge.modrep import decompose_P, fixed_points, is_irreducible, permutation_module
from cocycle_forge.pgroup import point_stabilizer, psl2

F = field_of_order(4)
L = psl2(F, p=3)
H = point_stabilizer(L)
print(L, "Borel:", H)

# the permutation module on the 5 points splits as trivial + V
P = permutation_module(L, 3)
dec = decompose_P(P)
V = dec.V
print("dim V =", V.dim, " fixed points of V:", len(fixed_points(V)))
print("V irreducible:", is_irreducible(V, certificate=True))

# a generator acts on V by a 4x4 matrix over F_3
print(V.generator_matrices[0])

r1 = h1(L, V)
print("H^1(L,V):", r1.summary())

# normalized Z^2 system has (60 - 1)^2 * 4 = 13924 unknowns
r2 = h2(L, V)
print("H^2(L,V):", r2.summary())

rep = r2.representatives[0]
nz = np.count_nonzero(rep.values.any(axis=2))
print(f"representative cocycle: {nz} nonzero pairs out of {len(L) ** 2}")
