"""Picard lattice of S_r: classes, intersection form, negative curves.

A class ``d0*H + d1*E_1 + ... + dr*E_r`` is stored as the integer tuple
``(d0, d1, ..., dr)``.  The intersection form is diag(1, -1, ..., -1).
"""
from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

MAX_R = 8

CURVE_COUNTS = {1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}


def _check_r(r: int, lo: int = 1, hi: int = MAX_R) -> None:
    if not isinstance(r, int) or not lo <= r <= hi:
        raise ValueError(f"r must be an integer in {lo}..{hi}, got {r!r}")


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        _check_r(len(self.coeffs) - 1)

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Coefficient of H, i.e. the degree of the image curve in the plane."""
        return self.coeffs[0]

    @classmethod
    def zero(cls, r: int) -> DivisorClass:
        return cls((0,) * (r + 1))

    @classmethod
    def H(cls, r: int) -> DivisorClass:
        return cls((1,) + (0,) * r)

    @classmethod
    def E(cls, r: int, i: int) -> DivisorClass:
        if not 1 <= i <= r:
            raise ValueError(f"E_{i} does not exist for r={r}")
        c = [0] * (r + 1)
        c[i] = 1
        return cls(tuple(c))

    def _same_r(self, other: DivisorClass) -> None:
        if self.r != other.r:
            raise ValueError(f"classes live on different surfaces: r={self.r} vs r={other.r}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._same_r(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._same_r(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(tuple(k * a for a in self.coeffs))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        return intersection(self, other)

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for idx, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sym = "H" if idx == 0 else f"E{idx}"
            if c == 1:
                parts.append(f"+{sym}")
            elif c == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{c:+d}{sym}")
        s = "".join(parts) or "0"
        return s[1:] if s.startswith("+") else s


def intersection(a: DivisorClass, b: DivisorClass) -> int:
    if a.r != b.r:
        raise ValueError(f"cannot intersect classes with r={a.r} and r={b.r}")
    ca, cb = a.coeffs, b.coeffs
    return ca[0] * cb[0] - sum(x * y for x, y in zip(ca[1:], cb[1:]))


def anticanonical(r: int) -> DivisorClass:
    """-K_r = 3H - (E_1 + ... + E_r)."""
    _check_r(r)
    return DivisorClass((3,) + (-1,) * r)


def anticanonical_degree(D: DivisorClass) -> int:
    return intersection(D, anticanonical(D.r))


class Kind(enum.Enum):
    EXCEPTIONAL = "E"
    LINE = "m"
    CONIC = "Q"
    CUBIC = "C"
    QUARTIC = "V"
    QUINTIC = "F"
    SEXTIC = "T"
    KAPPA = "K"

    @property
    def symbol(self) -> str:
        return self.value


FAMILY_ORDER = [Kind.EXCEPTIONAL, Kind.LINE, Kind.CONIC, Kind.CUBIC,
                Kind.QUARTIC, Kind.QUINTIC, Kind.SEXTIC]


@dataclass(frozen=True)
class NegativeCurve:
    """A (-1)-curve, labelled by its family and its index tuple.

    Index conventions (1-based point labels):

    * ``EXCEPTIONAL (i,)``, ``LINE (i, j)`` with i < j;
    * ``CONIC S``: the points the conic *misses* (``()`` for r = 5);
    * ``CUBIC (i, *S)``: double point p_i, missing the points in S;
    * ``QUARTIC (i, j, k)``: the three double points;
    * ``QUINTIC (i, j)``: the two simple points;
    * ``SEXTIC (i,)``: the triple point.
    """

    kind: Kind
    indices: tuple[int, ...]
    cls: DivisorClass

    @property
    def name(self) -> str:
        return self.kind.symbol + "".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return self.name


def _curve_class(r: int, kind: Kind, idx: tuple[int, ...]) -> DivisorClass:
    c = [0] * (r + 1)
    if kind is Kind.EXCEPTIONAL:
        c[idx[0]] = 1
        return DivisorClass(tuple(c))
    mult = {
        Kind.LINE: (1, 0),
        Kind.CONIC: (2, 1),
        Kind.CUBIC: (3, 1),
        Kind.QUARTIC: (4, 1),
        Kind.QUINTIC: (5, 2),
        Kind.SEXTIC: (6, 2),
    }
    d, base = mult[kind]
    c[0] = d
    for k in range(1, r + 1):
        c[k] = -base
    if kind is Kind.LINE:
        for i in idx:
            c[i] = -1
    elif kind is Kind.CONIC:
        for i in idx:
            c[i] = 0
    elif kind is Kind.CUBIC:
        c[idx[0]] = -2
        for j in idx[1:]:
            c[j] = 0
    elif kind is Kind.QUARTIC:
        for i in idx:
            c[i] = -2
    elif kind is Kind.QUINTIC:
        for i in idx:
            c[i] = -1
    elif kind is Kind.SEXTIC:
        c[idx[0]] = -3
    return DivisorClass(tuple(c))


def _family_indices(r: int, kind: Kind) -> Iterable[tuple[int, ...]]:
    pts = range(1, r + 1)
    if kind is Kind.EXCEPTIONAL:
        return [(i,) for i in pts]
    if kind is Kind.LINE:
        return list(itertools.combinations(pts, 2)) if r >= 2 else []
    if kind is Kind.CONIC:
        return list(itertools.combinations(pts, r - 5)) if r >= 5 else []
    if kind is Kind.CUBIC:
        if r < 7:
            return []
        out = []
        for i in pts:
            rest = [j for j in pts if j != i]
            out.extend((i,) + s for s in itertools.combinations(rest, r - 7))
        return out
    if r != 8:
        return []
    if kind is Kind.QUARTIC:
        return list(itertools.combinations(pts, 3))
    if kind is Kind.QUINTIC:
        return list(itertools.combinations(pts, 2))
    if kind is Kind.SEXTIC:
        return [(i,) for i in pts]
    return []


@lru_cache(maxsize=None)
def enumerate_negative_curves(r: int) -> tuple[NegativeCurve, ...]:
    """All (-1)-curves of S_r in canonical order (family, then lex index)."""
    _check_r(r)
    curves = []
    for kind in FAMILY_ORDER:
        for idx in _family_indices(r, kind):
            curves.append(NegativeCurve(kind, tuple(idx), _curve_class(r, kind, tuple(idx))))
    assert len(curves) == CURVE_COUNTS[r]
    return tuple(curves)


@dataclass(frozen=True)
class Generator:
    id: int
    kind: Kind
    indices: tuple[int, ...]
    cls: DivisorClass

    @property
    def is_kappa(self) -> bool:
        return self.kind is Kind.KAPPA

    @property
    def curve(self) -> NegativeCurve | None:
        if self.is_kappa:
            return None
        return NegativeCurve(self.kind, self.indices, self.cls)

    @property
    def name(self) -> str:
        if self.is_kappa:
            return f"kappa{self.indices[0]}"
        return self.kind.symbol + "".join(str(i) for i in self.indices)

    def to_record(self) -> dict:
        return {"id": self.id, "kind": self.name, "class": self.cls.to_list()}


@lru_cache(maxsize=None)
def generators(r: int) -> tuple[Generator, ...]:
    """Cox ring generators: negative curves, then kappa_1, kappa_2 when r = 8."""
    curves = enumerate_negative_curves(r)
    gens = [Generator(i, c.kind, c.indices, c.cls) for i, c in enumerate(curves)]
    if r == 8:
        k = anticanonical(8)
        gens.append(Generator(len(gens), Kind.KAPPA, (1,), k))
        gens.append(Generator(len(gens), Kind.KAPPA, (2,), k))
    return tuple(gens)


@lru_cache(maxsize=None)
def curve_index(r: int) -> dict[DivisorClass, int]:
    """Map from negative-curve class to generator id."""
    return {c.cls: i for i, c in enumerate(enumerate_negative_curves(r))}


@lru_cache(maxsize=None)
def intersection_matrix(r: int) -> tuple[tuple[int, ...], ...]:
    curves = enumerate_negative_curves(r)
    return tuple(tuple(intersection(a.cls, b.cls) for b in curves) for a in curves)


@dataclass(frozen=True)
class Reflection:
    """Reflection D -> D + (D.root) root in a (-2)-class."""

    root: DivisorClass

    def __post_init__(self):
        if intersection(self.root, self.root) != -2:
            raise ValueError("reflection root must have self-intersection -2")

    def __call__(self, D: DivisorClass) -> DivisorClass:
        return D + intersection(D, self.root) * self.root


def weyl_generators(r: int) -> list[Reflection]:
    """Simple reflections of W_r: E_i <-> E_{i+1} and the root H-E1-E2-E3."""
    _check_r(r, 3, 8)
    gens = [Reflection(DivisorClass.E(r, i) - DivisorClass.E(r, i + 1)) for i in range(1, r)]
    gens.append(Reflection(DivisorClass((1, -1, -1, -1) + (0,) * (r - 3))))
    return gens


def orbit(D: DivisorClass, gens: Iterable[Callable[[DivisorClass], DivisorClass]]) -> set[DivisorClass]:
    gens = list(gens)
    seen = {D}
    queue = deque([D])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_nef(D: DivisorClass) -> bool:
    """D.C >= 0 for every negative curve C (and the pencil H-E1 when r = 1)."""
    if any(intersection(D, c.cls) < 0 for c in enumerate_negative_curves(D.r)):
        return False
    if D.r == 1:
        # S_1 is not generated by (-1)-curves; the ruling H-E1 spans the other ray
        return intersection(D, DivisorClass((1, -1))) >= 0
    return True


def h0_nef(D: DivisorClass) -> int:
    """dim Gamma(S_r, D) for nef D by Riemann-Roch: D.(D-K)/2 + 1."""
    if not is_nef(D):
        raise ValueError(f"{D} is not nef")
    twice = intersection(D, D) + anticanonical_degree(D)
    return twice // 2 + 1


def h0(D: DivisorClass) -> int:
    """dim Gamma(S_r, D) for any class, for 2 <= r <= 8.

    Negative curves meeting D negatively are fixed components and get
    stripped; each strip lowers the anticanonical degree by one, so the loop
    ends either at a nef class or at negative degree (no sections).
    """
    if D.r < 2:
        raise ValueError("h0 needs r >= 2")
    curves = enumerate_negative_curves(D.r)
    while True:
        if anticanonical_degree(D) < 0:
            return 0
        bad = next((c for c in curves if intersection(D, c.cls) < 0), None)
        if bad is None:
            return h0_nef(D)
        D = D - bad.cls
