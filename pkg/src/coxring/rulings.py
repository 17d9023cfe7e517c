"""(n)-rulings: classes D1 + D2 of two negative curves with D1.D2 = n.

Every ruling carries the full list of degree-2 monomials of its Picard
degree, as ``(id, id)`` pairs over :func:`coxring.picard.generators`,
including the kappa monomials in degree -K_8 + D and -2K_8.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .picard import (
    DivisorClass,
    Kind,
    anticanonical,
    curve_index,
    enumerate_negative_curves,
    generators,
    intersection_matrix,
)

Monomial = tuple[int, int]


@dataclass(frozen=True)
class Ruling:
    cls: DivisorClass
    order: int
    representations: tuple[Monomial, ...]

    @property
    def r(self) -> int:
        return self.cls.r

    def to_record(self) -> dict:
        return {
            "class": self.cls.to_list(),
            "n": self.order,
            "representations": [list(m) for m in self.representations],
        }


def monomial_class(r: int, m: Monomial) -> DivisorClass:
    gens = generators(r)
    return gens[m[0]].cls + gens[m[1]].cls


def _check_supported(r: int, n: int) -> None:
    ok = (n == 1 and 3 <= r <= 8) or (n == 2 and r in (7, 8)) or (n == 3 and r == 8)
    if not ok:
        raise ValueError(f"no ({n})-rulings are generated for r={r}")


@lru_cache(maxsize=None)
def enumerate_rulings(r: int, n: int) -> tuple[Ruling, ...]:
    _check_supported(r, n)
    curves = enumerate_negative_curves(r)
    ints = intersection_matrix(r)
    groups: dict[DivisorClass, list[Monomial]] = defaultdict(list)
    for i, j in itertools.combinations(range(len(curves)), 2):
        if ints[i][j] == n:
            groups[curves[i].cls + curves[j].cls].append((i, j))
    if r == 8 and n == 2:
        k1, k2 = 240, 241
        index = curve_index(8)
        for R, reps in groups.items():
            d = index[R - anticanonical(8)]
            reps.extend([(d, k1), (d, k2)])
    if r == 8 and n == 3:
        assert list(groups) == [2 * anticanonical(8)]
        groups[2 * anticanonical(8)].extend([(240, 240), (240, 241), (241, 241)])
    rulings = [Ruling(R, n, tuple(sorted(reps))) for R, reps in groups.items()]
    rulings.sort(key=lambda R: R.cls.coeffs)
    return tuple(rulings)


def all_rulings(r: int) -> tuple[Ruling, ...]:
    """Every ruling block that contributes relations, by order then class."""
    orders = {7: (1, 2), 8: (1, 2, 3)}.get(r, (1,))
    return tuple(R for n in orders for R in enumerate_rulings(r, n))


_LETTERS = "ijklabcd"


def class_pattern_label(D: DivisorClass) -> str:
    """A family formula such as ``3H-(E1+..+E8)-E_i+E_j+E_k``.

    The base multiple of (E1+..+Er) is the most frequent E-coefficient (ties
    go to the one nearer zero); the remaining coefficients become named
    adjustments, larger deviations first, lowering terms before raising.
    """
    d0, es = D.coeffs[0], D.coeffs[1:]
    r = len(es)
    counts = Counter(es)
    base = max(counts, key=lambda v: (counts[v], -abs(v), v))
    out = "H" if d0 == 1 else f"{d0}H"
    if base != 0:
        m = -base
        span = f"(E1+..+E{r})"
        out += ("-" if m > 0 else "+") + ("" if abs(m) == 1 else str(abs(m))) + span
    devs = Counter(e - base for e in es if e != base)
    letters = iter(_LETTERS)
    for dev in sorted(devs, key=lambda v: (-abs(v), v)):
        names = [f"E_{next(letters)}" for _ in range(devs[dev])]
        mag = "" if abs(dev) == 1 else str(abs(dev))
        if dev < 0 and len(names) > 1:
            out += f"-{mag}(" + "+".join(names) + ")"
        else:
            sign = "-" if dev < 0 else "+"
            out += "".join(f"{sign}{mag}{nm}" for nm in names)
    return out


def _curve_family_label(kind: Kind, r: int) -> str:
    arity = {
        Kind.EXCEPTIONAL: 1, Kind.LINE: 2, Kind.CONIC: r - 5,
        Kind.CUBIC: r - 6, Kind.QUARTIC: 3, Kind.QUINTIC: 2, Kind.SEXTIC: 1,
    }[kind]
    return kind.symbol + ("_" + "ijk"[:arity] if arity else "")


def ruling_families(r: int, n: int) -> dict[str, tuple[Ruling, ...]]:
    """Partition the (n)-rulings into named families, keeping canonical order.

    (2)-rulings are ``-K_8 + X`` for a curve family X, the (1)-rulings of a
    cubic surface are ``-K_6 - X``, and all other (1)-rulings are labelled by
    their class pattern (see :func:`class_pattern_label`).
    """
    rulings = enumerate_rulings(r, n)
    curves = enumerate_negative_curves(r)
    index = curve_index(r)
    K = anticanonical(r)
    fam: dict[str, list[Ruling]] = defaultdict(list)
    for R in rulings:
        if n == 3:
            label = "-2K_8"
        elif n == 2 and r == 7:
            label = "-K_7"
        elif n == 2:
            label = "-K_8+" + _curve_family_label(curves[index[R.cls - K]].kind, r)
        elif r == 6:
            label = "-K_6-" + _curve_family_label(curves[index[K - R.cls]].kind, r)
        else:
            label = class_pattern_label(R.cls)
        fam[label].append(R)
    return {k: tuple(v) for k, v in fam.items()}


@dataclass(frozen=True)
class DynkinGraph:
    """Intersection-1 graph on the negative curves (vertex i = generator id i)."""

    r: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def dynkin_graph(r: int) -> DynkinGraph:
    if not 3 <= r <= 8:
        raise ValueError(f"r must be in 3..8, got {r}")
    ints = intersection_matrix(r)
    n = len(ints)
    edges = tuple((i, j) for i, j in itertools.combinations(range(n), 2) if ints[i][j] == 1)
    return DynkinGraph(r, tuple(range(n)), edges)


def triangles(r: int = 6) -> list[tuple[int, int, int]]:
    """Triples of pairwise-meeting lines on the cubic surface."""
    if r != 6:
        raise ValueError("triangles are defined for the cubic surface (r = 6) only")
    ints = intersection_matrix(6)
    return [t for t in itertools.combinations(range(27), 3)
            if ints[t[0]][t[1]] == ints[t[0]][t[2]] == ints[t[1]][t[2]] == 1]
