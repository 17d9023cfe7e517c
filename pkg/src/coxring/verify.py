"""Checks on a generated relation set.

Witness points and Jacobian ranks, reconstruction of a Cox point from the
coordinates orthogonal to one curve, truncated Hilbert functions with an
independent Riemann-Roch oracle, and the comparison against the classical
list of cubic-surface relations.
"""
from __future__ import annotations

import ast
import itertools
import math
import operator
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Mapping, Sequence

from . import linalg
from .fields import Field, QQ
from .picard import (
    DivisorClass,
    Kind,
    anticanonical,
    curve_index,
    enumerate_negative_curves,
    generators,
    h0,
    intersection,
)
from .plane import (
    DegenerateConfigurationError,
    PlaneForm,
    PointConfiguration,
    determinantal_form,
    generator_forms,
    proportionality,
    validate_general_position,
)
from .relations import QuadraticRelation, RelationSet, evaluate_relation, span_contains
from .rulings import enumerate_rulings

DEFAULT_TMAX = 3


@dataclass(frozen=True)
class Valuation:
    r: int
    field: Field
    values: tuple

    def __post_init__(self):
        n = len(generators(self.r))
        if len(self.values) != n:
            raise ValueError(f"valuation for r={self.r} needs {n} values, got {len(self.values)}")

    def __getitem__(self, i: int):
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def nonzero(self) -> dict[str, object]:
        gens = generators(self.r)
        return {gens[i].name: v for i, v in enumerate(self.values) if v != 0}


@dataclass(frozen=True)
class RankReport:
    rows: int
    cols: int
    rank: int
    residuals_zero: bool
    nonvanishing: tuple[int, ...] = ()

    def to_record(self) -> dict:
        return {"shape": [self.rows, self.cols], "rank": self.rank,
                "residuals_zero": self.residuals_zero, "nonvanishing": len(self.nonvanishing)}


def _jacobian_row(q: QuadraticRelation, v: Valuation, F: Field) -> dict[int, object]:
    row: dict[int, object] = defaultdict(int)
    for c, (a, b) in q.terms():
        if a == b:
            row[a] += 2 * c * v[a]
        else:
            row[a] += c * v[b]
            row[b] += c * v[a]
    return {k: F.norm(x) for k, x in row.items() if F.norm(x) != 0}


def jacobian_rank(rs: RelationSet, v: Valuation,
                  relations: Sequence[QuadraticRelation] | None = None) -> RankReport:
    """Residuals and exact Jacobian rank of (a subset of) ``rs`` at ``v``."""
    if v.r != rs.r or v.field != rs.field:
        raise ValueError("valuation and relation set disagree on r or field")
    F = rs.field
    rels = rs.relations if relations is None else list(relations)
    bad = tuple(i for i, q in enumerate(rels) if evaluate_relation(q, v.values, F) != 0)
    rank = linalg.sparse_rank((_jacobian_row(q, v, F) for q in rels), F)
    return RankReport(len(rels), len(v), rank, not bad, bad)


def _valuation_from_names(r: int, F: Field, named: Mapping[str, object]) -> Valuation:
    gens = generators(r)
    by_name = {g.name: g.id for g in gens}
    values = [F.zero] * len(gens)
    for name, x in named.items():
        values[by_name[name]] = F(x)
    return Valuation(r, F, tuple(values))


def _determinantal_scales(cfg: PointConfiguration, forms: Sequence[PlaneForm]) -> list:
    """t_D with determinantal_form(D) = t_D * curve_form(D), for r = 6."""
    return [proportionality(determinantal_form(c, cfg), forms[i])
            for i, c in enumerate(enumerate_negative_curves(cfg.r))]


def smooth_point(r: int, cfg: PointConfiguration, as_printed: bool = False,
                 forms: Sequence[PlaneForm] | None = None) -> Valuation:
    """Witness of smoothness of R_r/J_r for r = 6 or r = 8.

    r = 6 uses p5 = (1:a:b), p6 = (1:c:d) and the determinantal scaling of
    the curve forms, converted to the canonical scaling.  The printed
    coordinate list assigns c(d-1) to eta_5 and a(b-1) to eta_6; only the
    swapped assignment solves the three m56 relations, so that is the
    default and ``as_printed=True`` reproduces the literal list.

    r = 8 takes alpha_1..alpha_4 to be the second coordinates of p5..p8 and
    uses the canonical scaling directly.
    """
    F = cfg.field
    if r != cfg.r:
        raise ValueError(f"configuration has {cfg.r} points, expected {r}")
    if not cfg.is_normalized():
        raise ValueError("smooth_point needs a normalized configuration (p1..p4 standard, p_j=(1:a:b))")
    if r == 6:
        a, b, c, d = cfg.alpha(5), cfg.beta(5), cfg.alpha(6), cfg.beta(6)
        e5, e6 = a * (b - 1), c * (d - 1)
        if as_printed:
            e5, e6 = e6, e5
        det_scaled = {"E5": e5, "E6": e6, "m12": 1, "m14": -1, "m23": 1, "m34": 1, "Q5": 1, "Q6": 1}
        if forms is None:
            forms = generator_forms(cfg)
        scales = _determinantal_scales(cfg, forms)
        v = _valuation_from_names(6, F, det_scaled)
        return Valuation(6, F, tuple(F.div(x, t) for x, t in zip(v.values, scales)))
    if r == 8:
        a1, a2, a3, a4 = (cfg.alpha(j) for j in (5, 6, 7, 8))
        al = F.norm(a4 - a3)
        if al == 0 or F.norm(a1) == 0 or F.norm(a2) == 0:
            raise ValueError("alpha_8 = alpha_7 or alpha_5 alpha_6 = 0; choose a different configuration")
        named = {
            "E1": F.div(a3 * a4, al),
            "E2": F.div(a4, al),
            "E4": F.div((1 - a3) * a4, al),
            "E5": F.div((a1 - a3) * a4, a1 * al),
            "E6": F.div((a2 - a3) * a4, a2 * al),
            "E8": 1, "m13": 1, "m23": 1, "m34": 1, "m35": 1, "m36": 1, "m38": 1,
        }
        return _valuation_from_names(8, F, named)
    raise ValueError("smooth witnesses are provided for r = 6 and r = 8")


def singular_witness_r7(F: Field = QQ) -> Valuation:
    """eta_1 = lambda_1 = 1 (sections of E1 and C1), all other coordinates 0."""
    return _valuation_from_names(7, F, {"E1": 1, "C1": 1})


def sample_variety_point(cfg: PointConfiguration, rng: random.Random,
                         forms: Sequence[PlaneForm] | None = None,
                         nonzero: Sequence[int] = ()) -> Valuation:
    """A point of the relation variety: xi(D) = chi(D) * f_D(s).

    ``s`` is a random plane point and ``chi`` a random character of the Picard
    torus; every relation holds identically.  Coordinates listed in
    ``nonzero`` are guaranteed nonzero.
    """
    F = cfg.field
    if forms is None:
        forms = generator_forms(cfg)
    gens = generators(cfg.r)

    def draw():
        if F.characteristic:
            return rng.randrange(1, F.characteristic)
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9))

    for _ in range(100):
        s = (draw(), draw(), draw())
        t = [draw() for _ in range(cfg.r + 1)]
        vals = []
        for g, f in zip(gens, forms):
            chi = F.one
            for tk, dk in zip(t, g.cls.coeffs):
                chi = chi * (tk ** dk if dk >= 0 else F.inv(tk) ** (-dk))
            vals.append(F.norm(chi * f(s)))
        if all(vals[i] != 0 for i in nonzero):
            return Valuation(cfg.r, F, tuple(vals))
    raise RuntimeError("could not sample a point with the requested nonzero coordinates")


@dataclass
class PropagationResult:
    valuation: Valuation
    order: list[int]
    residuals: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.residuals


def propagate_dependence(D: int, partial: Mapping[int, object], rs: RelationSet) -> PropagationResult:
    """Recover every coordinate from xi(D) != 0 and the coordinates orthogonal to D.

    Solved in the order: curves meeting D once (via the ruling D + D'), then
    kappa_1, kappa_2 (via -K_8 + D), curves meeting D twice, and the curve
    meeting D three times (via -2K_8).  Each unknown is isolated by a
    combination of the relations in its degree that vanishes on all other
    unknown monomials.
    """
    r, F = rs.r, rs.field
    if r not in (7, 8):
        raise ValueError("dependence propagation is defined for r = 7, 8")
    gens = generators(r)
    if gens[D].is_kappa:
        raise ValueError("D must be a negative curve")
    vD = F.norm(partial.get(D, 0))
    if vD == 0:
        raise ValueError("the coordinate of D must be nonzero")
    curves = enumerate_negative_curves(r)
    dots = [intersection(curves[D].cls, c.cls) for c in curves]
    zeros = [i for i, x in enumerate(dots) if x == 0]
    missing = [i for i in zeros if i not in partial]
    if missing:
        raise KeyError(f"partial valuation lacks orthogonal coordinates {missing}")
    known: dict[int, object] = {i: F.norm(partial[i]) for i in zeros}
    known[D] = vD
    targets = [i for i, x in enumerate(dots) if x == 1]
    if r == 8:
        targets += [240, 241]
    targets += [i for i, x in enumerate(dots) if x == 2]
    targets += [i for i, x in enumerate(dots) if x == 3]

    blocks = {b.ruling.cls: b for b in rs.blocks}
    order = []
    for tgt in targets:
        cls = gens[D].cls + gens[tgt].cls
        block = blocks.get(cls)
        if block is None:
            raise KeyError(f"relation set has no block in degree {cls}")
        reps = block.ruling.representations
        tmon = tuple(sorted((D, tgt)))
        unknown_cols = [j for j, (a, b) in enumerate(reps) if a not in known or b not in known]
        tcol = reps.index(tmon)
        B = [q.coeffs for q in block.relations]
        A = [[row[u] for row in B] for u in unknown_cols]
        rhs = [F.one if u == tcol else F.zero for u in unknown_cols]
        c = linalg.solve(A, rhs, F) if B else None
        if c is None:
            raise DegenerateConfigurationError(
                f"no relation in degree {cls} isolates {gens[tgt].name}", cls)
        rest = F.zero
        for j, (a, b) in enumerate(reps):
            if j in unknown_cols:
                continue
            coef = F.norm(sum(ci * row[j] for ci, row in zip(c, B)))
            if coef != 0:
                rest = rest + coef * known[a] * known[b]
        known[tgt] = F.norm(-F.div(F.norm(rest), vD))
        order.append(tgt)

    if len(known) != len(gens):
        raise RuntimeError("propagation left coordinates undetermined")
    val = Valuation(r, F, tuple(known[i] for i in range(len(gens))))
    residuals = [i for i, q in enumerate(rs.relations) if evaluate_relation(q, val.values, F) != 0]
    return PropagationResult(val, order, residuals)


def _check_t(t: int, tmax: int) -> None:
    if t < 0:
        raise ValueError("degree must be >= 0")
    if t > tmax:
        raise ValueError(f"degree {t} exceeds T_max={tmax}: out of desk scale")


def hilbert_function(rs: RelationSet, t: int, tmax: int = DEFAULT_TMAX,
                     max_monomials: int = 500_000, max_rows: int = 200_000) -> int:
    """dim of the degree-t part of R_r/J_r (standard grading), by exact elimination.

    J_t is spanned by the products m*q for monomials m of degree t-2; the
    elimination runs separately in each Picard degree.
    """
    if not 4 <= rs.r <= 7:
        raise ValueError("Hilbert function checks are for 4 <= r <= 7")
    _check_t(t, tmax)
    gens = generators(rs.r)
    N = len(gens)
    total = math.comb(N + t - 1, t)
    if total > max_monomials:
        raise ValueError(f"{total} monomials of degree {t}: out of desk scale")
    if t < 2:
        return total
    nrows = math.comb(N + t - 3, t - 2) * len(rs)
    if nrows > max_rows:
        raise ValueError(f"{nrows} products m*q in degree {t}: out of desk scale")
    F = rs.field
    classes = [g.cls.coeffs for g in gens]

    def mclass(mon):
        return tuple(map(sum, zip(*(classes[i] for i in mon)))) if mon else (0,) * (rs.r + 1)

    rows_by_class: dict[tuple, list[dict]] = defaultdict(list)
    lower = list(itertools.combinations_with_replacement(range(N), t - 2))
    for q in rs.relations:
        qc = q.cls.coeffs
        terms = list(q.terms())
        for m in lower:
            row: dict[tuple, object] = {}
            for c, (a, b) in terms:
                key = tuple(sorted(m + (a, b)))
                row[key] = row.get(key, 0) + c
            key_cls = tuple(x + y for x, y in zip(mclass(m), qc))
            rows_by_class[key_cls].append(row)
    rank = sum(linalg.sparse_rank(rows, F) for rows in rows_by_class.values())
    return total - rank


def hilbert_oracle(r: int, t: int, tmax: int = DEFAULT_TMAX) -> int:
    """Sum of h0(D) over classes D that are sums of t generator classes."""
    if r == 8:
        raise ValueError("no oracle for r = 8: the relation ideal is not known to be radical")
    if not 2 <= r <= 7:
        raise ValueError("Hilbert oracle needs 2 <= r <= 7")
    _check_t(t, tmax)
    gen_classes = {g.cls for g in generators(r)}
    level = {DivisorClass.zero(r)}
    for _ in range(t):
        level = {D + g for D in level for g in gen_classes}
    return sum(h0(D) for D in level)


# -- classical relations of the cubic surface ---------------------------------

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul}


def _eval_expr(expr: str, env: Mapping[str, object], F: Field):
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return F.norm(node.value) if F.characteristic else Fraction(node.value)
        if isinstance(node, ast.Name):
            return env[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            x = ev(node.operand)
            return F.norm(-x) if isinstance(node.op, ast.USub) else x
        if isinstance(node, ast.BinOp):
            x, y = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Div):
                return F.div(x, y)
            return F.norm(_OPS[type(node.op)](x, y))
        raise ValueError(f"unsupported expression {expr!r}")
    return ev(ast.parse(expr, mode="eval"))


@dataclass(frozen=True)
class GoldenLine:
    label: str
    ruling_class: DivisorClass
    in_span: bool
    reason: str = ""

    def to_record(self) -> dict:
        return {"line": self.label, "ruling": self.ruling_class.to_list(),
                "pass": self.in_span, "reason": self.reason}


def load_cubic_relations() -> list[tuple[str, str, list[tuple[str, str, str]]]]:
    """Parse the bundled list as (line name, index, [(coefficient, var, var)])."""
    text = resources.files("coxring").joinpath("data/cubic_surface_relations.txt").read_text()
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, body = line.split(":", 1)
        name, idx = head.split()
        terms = []
        for t in body.split(";"):
            coef, mon = t.split()
            v1, v2 = mon.split("*")
            terms.append((coef, v1, v2))
        out.append((name, idx, terms))
    return out


def screened_denominators(a, b, c, d, F: Field) -> dict[str, object]:
    E = F.norm((b - 1) * (c - 1) - (a - 1) * (d - 1))
    return {"b": F.norm(b), "d": F.norm(d), "E": E, "a-c": F.norm(a - c),
            "c-1": F.norm(c - 1), "a-1": F.norm(a - 1)}


def golden_cubic_relations(params: Sequence = (2, 3, 5, 7), F: Field = QQ) -> list[GoldenLine]:
    """Check each classical cubic-surface relation for membership in the generated kernel.

    The list is written in the determinantal scaling, so every coefficient of
    a monomial (g, h) is multiplied by t_g * t_h before the test.
    """
    cfg = PointConfiguration.from_params(F, params)
    if cfg.r != 6:
        raise ValueError("the classical list needs exactly (a, b, c, d)")
    w = validate_general_position(cfg)
    if w is not None:
        raise ValueError(f"points not in general position: {w}")
    a, b, c, d = (cfg.alpha(5), cfg.beta(5), cfg.alpha(6), cfg.beta(6))
    zeros = [k for k, v in screened_denominators(a, b, c, d, F).items() if v == 0]
    if zeros:
        raise ValueError(f"parameters make denominators vanish: {zeros}")
    env = {"a": a, "b": b, "c": c, "d": d,
           "E": F.norm((b - 1) * (c - 1) - (a - 1) * (d - 1)), "F": F.norm(b * c - a * d)}
    forms = generator_forms(cfg)
    scales = _determinantal_scales(cfg, forms)
    gens = generators(6)
    by_name = {g.name: g.id for g in gens}
    var_prefix = {"eta": "E", "mu": "m", "lambda": "Q"}
    rulings = {R.cls: R for R in enumerate_rulings(6, 1)}
    K = anticanonical(6)
    report = []
    for name, idx, terms in load_cubic_relations():
        R = rulings[K - gens[by_name[name]].cls]
        cand = [F.zero] * len(R.representations)
        reason = ""
        for coef, v1, v2 in terms:
            ids = []
            for v in (v1, v2):
                stem = v.rstrip("0123456789")
                ids.append(by_name[var_prefix[stem] + v[len(stem):]])
            mon = tuple(sorted(ids))
            if mon not in R.representations:
                reason = f"monomial {v1}*{v2} is not of degree {R.cls}"
                break
            j = R.representations.index(mon)
            cand[j] = F.norm(cand[j] + _eval_expr(coef, env, F) * scales[ids[0]] * scales[ids[1]])
        ok = not reason and any(x != 0 for x in cand) and span_contains(R, cand, cfg, forms)
        if not ok and not reason:
            reason = "not in the kernel of the product matrix"
        report.append(GoldenLine(f"{name} {idx}", R.cls, ok, reason))
    return report
