"""Points in P^2 over an exact field and the plane forms f_D of the generators.

Monomials x0^e0 x1^e1 x2^e2 of degree d are ordered by descending lex on
(e0, e1, e2); a form is its coefficient vector in that order.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import linalg
from .fields import Field, QQ
from .picard import DivisorClass, Kind, NegativeCurve, anticanonical, generators

STANDARD_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


class DegenerateConfigurationError(ValueError):
    """A linear system had the wrong dimension for the given points."""

    def __init__(self, message: str, cls: DivisorClass | None = None):
        super().__init__(message)
        self.cls = cls


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    return tuple((e0, e1, d - e0 - e1) for e0 in range(d, -1, -1) for e1 in range(d - e0, -1, -1))


@lru_cache(maxsize=None)
def _monomial_index(d: int) -> dict[tuple[int, int, int], int]:
    return {e: i for i, e in enumerate(monomials(d))}


def _falling(n: int, k: int) -> int:
    return math.perm(n, k) if k <= n else 0


def derivative_row(d: int, point: Sequence, alpha: tuple[int, int, int], F: Field) -> list:
    """Row of d^alpha X^e evaluated at ``point`` for every monomial X^e of degree d."""
    row = []
    for e in monomials(d):
        c = 1
        val = F.one
        for ek, ak, pk in zip(e, alpha, point):
            if ek < ak:
                c = 0
                break
            c *= _falling(ek, ak)
            val = val * pk ** (ek - ak)
        row.append(F.norm(c * val) if c else F.zero)
    return row


def _orders(k: int):
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


@dataclass(frozen=True)
class PointConfiguration:
    field: Field
    points: tuple[tuple, ...]

    def __post_init__(self):
        F = self.field
        pts = tuple(tuple(F(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != 3:
                raise ValueError(f"points need three homogeneous coordinates, got {p}")
            if all(c == 0 for c in p):
                raise ValueError("(0:0:0) is not a point")
        object.__setattr__(self, "points", pts)

    @property
    def r(self) -> int:
        return len(self.points)

    @classmethod
    def from_params(cls, field: Field, params: Sequence = (), r: int | None = None) -> PointConfiguration:
        """The normalized configuration p1..p4 standard, p_j = (1 : alpha_j : beta_j).

        ``params`` is the flat list alpha_5, beta_5, alpha_6, beta_6, ...
        """
        if len(params) % 2:
            raise ValueError("parameters come in (alpha, beta) pairs")
        extra = [(1, params[i], params[i + 1]) for i in range(0, len(params), 2)]
        if r is None:
            r = 4 + len(extra)
        if r <= 4 and extra:
            raise ValueError(f"r={r} takes no extra parameters")
        if r > 4 and len(extra) != r - 4:
            raise ValueError(f"r={r} needs {2 * (r - 4)} parameters, got {len(params)}")
        return cls(field, tuple(STANDARD_POINTS[:min(r, 4)]) + tuple(extra))

    def is_normalized(self) -> bool:
        F = self.field
        for p, q in zip(self.points, STANDARD_POINTS):
            if p != tuple(F(c) for c in q):
                return False
        return all(p[0] == 1 for p in self.points[4:])

    def alpha(self, j: int):
        return self.points[j - 1][1]

    def beta(self, j: int):
        return self.points[j - 1][2]

    def to_record(self) -> dict:
        F = self.field
        return {"field": F.spec(), "r": self.r,
                "points": [[F.to_str(c) for c in p] for p in self.points]}


@dataclass(frozen=True)
class Witness:
    """Why a configuration is not in general position (1-based point labels)."""

    condition: str
    indices: tuple[int, ...]

    def to_record(self) -> dict:
        return {"condition": self.condition, "points": list(self.indices)}


def validate_general_position(cfg: PointConfiguration) -> Witness | None:
    """Return ``None`` if the points are in general position, else a witness.

    Checked: distinct points, no three on a line, no six on a conic and (for
    r = 8) no cubic through all eight points singular at one of them.
    """
    F, pts, r = cfg.field, cfg.points, cfg.r
    for i, j in itertools.combinations(range(r), 2):
        if linalg.rank([pts[i], pts[j]], F) < 2:
            return Witness("coincident", (i + 1, j + 1))
    for t in itertools.combinations(range(r), 3):
        if linalg.det([pts[k] for k in t], F) == 0:
            return Witness("collinear", tuple(k + 1 for k in t))
    if r >= 6:
        for s in itertools.combinations(range(r), 6):
            rows = [derivative_row(2, pts[k], (0, 0, 0), F) for k in s]
            if linalg.det(rows, F) == 0:
                return Witness("conic", tuple(k + 1 for k in s))
    if r == 8:
        for i in range(8):
            rows = [derivative_row(3, p, (0, 0, 0), F) for p in pts]
            rows += [derivative_row(3, pts[i], a, F) for a in _orders(1)]
            if linalg.rank(rows, F) < 10:
                return Witness("cubic-double", (i + 1,))
    return None


@dataclass(frozen=True)
class PlaneForm:
    field: Field
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(monomials(self.degree)):
            raise ValueError("coefficient vector does not match the degree")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, point: Sequence):
        return self.partial(point, (0, 0, 0))

    def partial(self, point: Sequence, alpha: tuple[int, int, int]):
        F = self.field
        row = derivative_row(self.degree, point, alpha, F)
        return F.norm(sum(a * b for a, b in zip(row, self.coeffs)))

    def multiplicity_at(self, point: Sequence) -> int:
        for k in range(self.degree + 1):
            if any(self.partial(point, a) != 0 for a in _orders(k)):
                return k
        return self.degree + 1

    def __mul__(self, other: PlaneForm) -> PlaneForm:
        return multiply(self, other)

    def scaled(self, c) -> PlaneForm:
        F = self.field
        return PlaneForm(F, self.degree, tuple(F.norm(c * x) for x in self.coeffs))

    def to_record(self) -> dict:
        return {"degree": self.degree, "coeffs": [self.field.to_str(c) for c in self.coeffs]}


def multiply(f: PlaneForm, g: PlaneForm) -> PlaneForm:
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field} vs {g.field}")
    F = f.field
    d = f.degree + g.degree
    index = _monomial_index(d)
    out = [F.zero] * len(index)
    mf, mg = monomials(f.degree), monomials(g.degree)
    for a, ca in zip(mf, f.coeffs):
        if ca == 0:
            continue
        for b, cb in zip(mg, g.coeffs):
            if cb != 0:
                k = index[(a[0] + b[0], a[1] + b[1], a[2] + b[2])]
                out[k] = out[k] + ca * cb
    return PlaneForm(F, d, tuple(F.norm(x) for x in out))


def constant_form(field: Field) -> PlaneForm:
    return PlaneForm(field, 0, (field.one,))


def linear_system(D: DivisorClass, cfg: PointConfiguration) -> list[PlaneForm]:
    """Forms of degree D.degree with multiplicity >= -D.coeffs[j] at p_j.

    Returned as the reduced echelon basis of the solution space.
    """
    if D.r != cfg.r:
        raise ValueError(f"class has r={D.r} but configuration has r={cfg.r}")
    F, d = cfg.field, D.degree
    if d < 0:
        return []
    rows = []
    for p, c in zip(cfg.points, D.coeffs[1:]):
        m = -c
        if m > 0:
            rows.extend(derivative_row(d, p, a, F) for k in range(m) for a in _orders(k))
    n = len(monomials(d))
    if not rows:
        basis = [[F.one if i == k else F.zero for i in range(n)] for k in range(n)]
    else:
        basis = linalg.nullspace(rows, n, F)
    return [PlaneForm(F, d, tuple(v)) for v in basis]


def curve_form(curve: NegativeCurve, cfg: PointConfiguration) -> PlaneForm:
    """The form cutting out the image of ``curve``, first nonzero coefficient 1.

    Exceptional curves get the constant 1.
    """
    if curve.kind is Kind.EXCEPTIONAL:
        return constant_form(cfg.field)
    sols = linear_system(curve.cls, cfg)
    if len(sols) != 1:
        raise DegenerateConfigurationError(
            f"linear system of {curve.name} ({curve.cls}) has dimension {len(sols)}, expected 1",
            curve.cls)
    return sols[0]


def cubic_pencil(cfg: PointConfiguration) -> tuple[PlaneForm, PlaneForm]:
    """Reduced echelon basis of the cubics through all eight points."""
    if cfg.r != 8:
        raise ValueError("the anticanonical pencil is only used for r = 8")
    sols = linear_system(anticanonical(8), cfg)
    if len(sols) != 2:
        raise DegenerateConfigurationError(
            f"cubics through the 8 points form a space of dimension {len(sols)}, expected 2",
            anticanonical(8))
    return sols[0], sols[1]


def generator_forms(cfg: PointConfiguration) -> tuple[PlaneForm, ...]:
    """f_D for every generator id of S_r (kappa forms from the cubic pencil)."""
    forms = []
    for g in generators(cfg.r):
        if g.is_kappa:
            continue
        forms.append(curve_form(g.curve, cfg))
    if cfg.r == 8:
        forms.extend(cubic_pencil(cfg))
    return tuple(forms)


def determinantal_form(curve: NegativeCurve, cfg: PointConfiguration) -> PlaneForm:
    """Interpolation-determinant scaling for exceptional curves, lines and conics.

    A line through p_i, p_j (i < j) is det[x; p_j; p_i]; a conic through five
    points q1..q5 (increasing labels) is det of the 6x6 matrix whose first row
    is the monomial vector and whose other rows are the monomials at q_k.
    Exceptional curves get 1.  This is the scaling behind the classical
    printed relations of the cubic surface.
    """
    F = cfg.field
    if curve.kind is Kind.EXCEPTIONAL:
        return constant_form(F)
    if curve.kind is Kind.LINE:
        i, j = curve.indices
        pi, pj = cfg.points[i - 1], cfg.points[j - 1]
        # expand along the first row
        c0 = F.norm(pj[1] * pi[2] - pj[2] * pi[1])
        c1 = F.norm(-(pj[0] * pi[2] - pj[2] * pi[0]))
        c2 = F.norm(pj[0] * pi[1] - pj[1] * pi[0])
        return PlaneForm(F, 1, (c0, c1, c2))
    if curve.kind is Kind.CONIC and curve.cls.degree == 2:
        through = [k for k in range(1, cfg.r + 1) if curve.cls.coeffs[k] == -1]
        if len(through) != 5:
            raise ValueError("determinantal conic needs exactly five points")
        rows = [derivative_row(2, cfg.points[k - 1], (0, 0, 0), F) for k in through]
        coeffs = []
        for col in range(6):
            minor = [[x for c, x in enumerate(row) if c != col] for row in rows]
            coeffs.append(F.norm((-1) ** col * linalg.det(minor, F)))
        return PlaneForm(F, 2, tuple(coeffs))
    raise ValueError(f"no determinantal scaling for {curve.name}")


def proportionality(f: PlaneForm, g: PlaneForm):
    """The scalar c with f = c * g (raises if they are not proportional)."""
    F = f.field
    if f.degree != g.degree:
        raise ValueError("forms of different degree are not proportional")
    k = next((i for i, x in enumerate(g.coeffs) if x != 0), None)
    if k is None:
        raise ValueError("zero form")
    c = F.div(f.coeffs[k], g.coeffs[k])
    if any(F.norm(a - c * b) != 0 for a, b in zip(f.coeffs, g.coeffs)):
        raise ValueError("forms are not proportional")
    return c


__all__ = [
    "QQ", "STANDARD_POINTS", "DegenerateConfigurationError", "PlaneForm", "PointConfiguration",
    "Witness", "constant_form", "cubic_pencil", "curve_form", "derivative_row", "determinantal_form",
    "generator_forms", "linear_system", "monomials", "multiply", "proportionality",
    "validate_general_position",
]
