"""Negative curves, rulings and the 27 lines.

Run: python notebooks/01_curves_and_rulings.py
"""
from collections import Counter

from coxring.picard import anticanonical, enumerate_negative_curves, orbit, weyl_generators, DivisorClass
from coxring.rulings import enumerate_rulings, ruling_families, triangles

# The (-1)-curves of S_r, in family order E, m, Q, C, V, F, T.
for r in range(3, 9):
    curves = enumerate_negative_curves(r)
    kinds = Counter(c.kind.symbol for c in curves)
    print(f"r={r}: {len(curves):3d} curves  {dict(kinds)}")

# They form a single orbit of the Weyl group acting on Pic(S_r).
O = orbit(DivisorClass.E(8, 1), weyl_generators(8))
print("orbit of E1 under W_8:", len(O))

# A ruling is a conic-bundle class D1 + D2 with D1.D2 = 1.
for R in enumerate_rulings(6, 1)[:3]:
    print(R.cls, "written in", len(R.representations), "ways")
print({k: len(v) for k, v in ruling_families(8, 1).items()})

# On the cubic surface, 45 triangles of lines; each one sums to -K_6.
tri = triangles()
names = [c.name for c in enumerate_negative_curves(6)]
print(len(tri), "triangles, e.g.", [names[i] for i in tri[0]])
cls = [c.cls for c in enumerate_negative_curves(6)]
assert all(cls[a] + cls[b] + cls[c] == anticanonical(6) for a, b, c in tri)
