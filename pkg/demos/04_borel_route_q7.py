"""q = 7: the direct solve for H^2(L, V) is too big, so go through the Borel subgroup.

dim H^2(L, V) = dim H^2(H, I_H) - dim H^2(L, I_L)
"""
import time

from cocycle_forge.cohom import shapiro_dim_route
from cocycle_forge.extgrp import full_pipeline, uniqueness_check
from cocycle_forge.gf import field_of_order
from cocycle_forge.pgroup import point_stabilizer, psl2

L = psl2(field_of_order(7), p=3)
H = point_stabilizer(L)
print("direct Z^2 columns would be", (len(L) - 1) ** 2 * 7)

t = time.time()
print(shapiro_dim_route(L, H, 3), f"{time.time() - t:.1f}s")

res = full_pipeline(7, 3)
print(res.E)
for row in res.provenance:
    print(row)

print(uniqueness_check(7, 3, pipeline=res, samples=10**5))
