"""Low-degree Hilbert function of R_r/J_r against Riemann-Roch.

Run: python notebooks/04_hilbert.py
"""
from coxring import PointConfiguration, QQ, full_ideal
from coxring.verify import hilbert_function, hilbert_oracle

params = {4: (), 5: (2, 3), 6: (2, 3, 5, 7)}
for r, ps in params.items():
    rs = full_ideal(r, PointConfiguration.from_params(QQ, ps, r=r))
    alg = [hilbert_function(rs, t) for t in range(4)]
    geo = [hilbert_oracle(r, t) for t in range(4)]
    print(f"r={r}: relations {alg}  sections {geo}")

try:
    hilbert_function(rs, 4)
except ValueError as e:
    print("t=4:", e)
