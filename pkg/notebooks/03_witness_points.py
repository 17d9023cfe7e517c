"""Jacobian ranks at witness points and dependence propagation.

Run: python notebooks/03_witness_points.py
"""
import random

from coxring import PointConfiguration, PrimeField, QQ, full_ideal
from coxring.picard import generators, intersection
from coxring.verify import (
    jacobian_rank,
    propagate_dependence,
    sample_variety_point,
    singular_witness_r7,
    smooth_point,
)

cfg6 = PointConfiguration.from_params(QQ, (2, 3, 5, 7))
rs6 = full_ideal(6, cfg6)
print("r=6 smooth point:", jacobian_rank(rs6, smooth_point(6, cfg6)).to_record())
# the coordinate list as printed swaps eta_5 and eta_6 and misses two relations
print("as printed:      ", jacobian_rank(rs6, smooth_point(6, cfg6, as_printed=True)).to_record())

F = PrimeField(101)
cfg7 = PointConfiguration.from_params(F, (2, 3, 5, 7, 13, 17))
rs7 = full_ideal(7, cfg7)
q = singular_witness_r7(F)
ruling = [x for b in rs7.blocks if b.ruling.order == 1 for x in b.relations]
print("r=7 point q on the 504 ruling relations:", jacobian_rank(rs7, q, ruling).to_record())
print("r=7 point q on all 529:", jacobian_rank(rs7, q).to_record())

# Keep xi(E1) and the 27 coordinates orthogonal to E1; recover the other 28.
gens = generators(7)
p = sample_variety_point(cfg7, random.Random(0), nonzero=[0])
partial = {i: p[i] for i in range(56) if i == 0 or intersection(gens[i].cls, gens[0].cls) == 0}
res = propagate_dependence(0, partial, rs7)
print(len(partial), "known ->", len(res.order), "solved; exact:", res.valuation == p, "residuals:", res.residuals)
