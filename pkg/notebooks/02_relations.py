"""Quadratic relations from a concrete point configuration.

Run: python notebooks/02_relations.py
"""
from coxring import PointConfiguration, PrimeField, QQ, full_ideal, validate_general_position
from coxring.plane import generator_forms
from coxring.relations import relation_string
from coxring.verify import golden_cubic_relations

# Seven points over F_101: p1..p4 standard, then (1:2:3), (1:5:7), (1:13:17).
F = PrimeField(101)
cfg = PointConfiguration.from_params(F, (2, 3, 5, 7, 13, 17))
print("general position:", validate_general_position(cfg) is None)

forms = generator_forms(cfg)
print("conic Q12 through p3..p7:", forms[28].coeffs)

rs = full_ideal(7, cfg, forms)
print(len(rs), "relations", rs.counts_by_order())
print(relation_string(rs.relations[0], F))

# The cubic surface over Q: every relation of the classical list lies in
# the kernel we compute.
lines = golden_cubic_relations((2, 3, 5, 7), QQ)
print(sum(ln.in_span for ln in lines), "of", len(lines), "classical relations recovered")
