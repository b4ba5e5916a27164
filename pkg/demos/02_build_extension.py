"""Build the nonsplit extension 3^4 . PSL2(4) and poke at it.

The cocycle is made from the carry cocycle of the Borel quotient H/H' ~ Z_3,
induced to L and projected onto V.
"""
import numpy as np

from cocycle_forge.cohom import is_coboundary
from cocycle_forge.extgrp import full_pipeline

res = full_pipeline(4, 3)
for row in res.provenance:
    print(f"{row['stage']:10s} {'ok' if row['result'] else 'FAILED'}  {row['check']}")

E = res.E
print(E)

# the carry cocycle on Z_3 (pulled back to H)
print("sigma on H, first rows:\n", res.sigma.values[:4, :12, 0])

# products in E
rng = np.random.default_rng(0)
x = (rng.integers(0, 3, 4), 7)
y = (rng.integers(0, 3, 4), 31)
print("x*y =", E.mul(x, y))
print("x * x^-1 =", E.mul(x, E.inv(x)))

# a complement to V exists iff tau is a coboundary
print("split?", is_coboundary(E.tau) is not None)
