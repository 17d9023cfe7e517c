"""Batch verification suites producing ``{check, inputs, expected, actual, pass}`` records."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from .fields import Field, PrimeField, QQ
from .picard import enumerate_negative_curves, generators, intersection, intersection_matrix
from .plane import PointConfiguration, generator_forms, validate_general_position
from .relations import full_ideal, ruling_ranks
from .rulings import all_rulings, dynkin_graph, enumerate_rulings, triangles
from . import verify

CURVE_COUNTS = {3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}
VALENCIES = {3: 2, 4: 3, 5: 5, 6: 10, 7: 27, 8: 126}
RULING_COUNTS = {3: 3, 4: 5, 5: 10, 6: 27, 7: 126, 8: 2160}
RULING_RELATIONS = {3: 0, 4: 5, 5: 20, 6: 81, 7: 504, 8: 10800}
IDEAL_SIZES = {4: 5, 5: 20, 6: 81, 7: 529, 8: 17399}
WITNESS_RANKS = {6: 18, 7: 54, 8: 231}

DEFAULT_PARAMS = {
    4: (), 5: (2, 3), 6: (2, 3, 5, 7), 7: (2, 3, 5, 7, 13, 17),
    8: (2, 3, 5, 7, 13, 17, 19, 23),
}
DEFAULT_FIELDS = {4: QQ, 5: QQ, 6: QQ, 7: PrimeField(101), 8: PrimeField(32003)}

SUITES = ("table1", "triangles", "golden81", "ranks", "hilbert", "propagation")


@dataclass(frozen=True)
class RunConfig:
    cfg: PointConfiguration
    tmax: int = verify.DEFAULT_TMAX
    seed: int = 0

    @property
    def r(self) -> int:
        return self.cfg.r

    @property
    def field(self) -> Field:
        return self.cfg.field

    @classmethod
    def default(cls, r: int = 7, field: Field | None = None, **kw) -> RunConfig:
        if r not in DEFAULT_PARAMS:
            raise ValueError(f"no default configuration for r={r}")
        F = DEFAULT_FIELDS[r] if field is None else field
        return cls(PointConfiguration.from_params(F, DEFAULT_PARAMS[r], r=r), **kw)

    def inputs(self) -> dict:
        return self.cfg.to_record()


def record(check: str, inputs, expected, actual, ok: bool | None = None) -> dict:
    return {"check": check, "inputs": inputs, "expected": expected, "actual": actual,
            "pass": expected == actual if ok is None else ok}


def table1(run: RunConfig | None = None) -> Iterator[dict]:
    for r in range(3, 9):
        curves = enumerate_negative_curves(r)
        yield record("negative_curves", {"r": r}, CURVE_COUNTS[r], len(curves))
        ints = intersection_matrix(r)
        vals = sorted({row.count(1) for row in ints})
        yield record("valency", {"r": r}, [VALENCIES[r]], vals)
        rulings = enumerate_rulings(r, 1)
        yield record("rulings_1", {"r": r}, RULING_COUNTS[r], len(rulings))
        yield record("ruling_relations", {"r": r}, RULING_RELATIONS[r],
                     sum(len(R.representations) - 2 for R in rulings))


def triangle_suite(run: RunConfig | None = None) -> Iterator[dict]:
    g = dynkin_graph(6)
    tri = triangles(6)
    yield record("dynkin_edges", {"r": 6}, 135, len(g.edges))
    yield record("triangles", {"r": 6}, 45, len(tri))
    per_edge = Counter(e for t in tri for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))
    yield record("triangles_per_edge", {"r": 6}, [1], sorted({per_edge[e] for e in g.edges}))
    per_vertex = Counter(v for t in tri for v in t)
    yield record("triangles_per_vertex", {"r": 6}, [5], sorted({per_vertex[v] for v in g.vertices}))


def golden81(run: RunConfig | None = None) -> Iterator[dict]:
    if run is not None and run.r == 6:
        F, params = run.field, [run.cfg.alpha(5), run.cfg.beta(5), run.cfg.alpha(6), run.cfg.beta(6)]
    else:
        F, params = QQ, [2, 3, 5, 7]
    inputs = {"field": F.spec(), "params": [F.to_str(x) for x in params]}
    lines = verify.golden_cubic_relations(params, F)
    for ln in lines:
        if not ln.in_span:
            yield record("golden_line", dict(inputs, line=ln.label), True, False, False) | {"reason": ln.reason}
    yield record("golden81", inputs, 81, sum(ln.in_span for ln in lines))


def _require_valid(run: RunConfig) -> None:
    w = validate_general_position(run.cfg)
    if w is not None:
        raise ValueError(f"points not in general position: {w.condition} {list(w.indices)}")


def ranks(run: RunConfig) -> Iterator[dict]:
    _require_valid(run)
    r, cfg = run.r, run.cfg
    inputs = run.inputs()
    forms = generator_forms(cfg)
    measured = ruling_ranks(r, cfg, forms)
    bad = [R.cls.to_list() for R, k in measured if k != R.order + 1]
    yield record("ruling_ranks", inputs, [], bad)
    rs = full_ideal(r, cfg, forms)
    yield record("ideal_size", inputs, IDEAL_SIZES[r], len(rs))
    wrong_blocks = [b.ruling.cls.to_list() for b in rs.blocks
                    if len(b.relations) != len(b.ruling.representations) - (b.ruling.order + 1)]
    yield record("block_sizes", inputs, [], wrong_blocks)
    if r in (6, 8):
        rep = verify.jacobian_rank(rs, verify.smooth_point(r, cfg, forms=forms))
        yield record("smooth_point", inputs, {"residuals_zero": True, "rank": WITNESS_RANKS[r]},
                     {"residuals_zero": rep.residuals_zero, "rank": rep.rank})
    elif r == 7:
        q = verify.singular_witness_r7(run.field)
        ruling_rels = [x for b in rs.blocks if b.ruling.order == 1 for x in b.relations]
        extra = [x for b in rs.blocks if b.ruling.order == 2 for x in b.relations]
        rep = verify.jacobian_rank(rs, q, ruling_rels)
        yield record("singular_witness", inputs, {"residuals_zero": True, "rank": 54},
                     {"residuals_zero": rep.residuals_zero, "rank": rep.rank})
        ext = verify.jacobian_rank(rs, q, extra)
        yield record("singular_witness_extra", inputs, {"nonzero_residuals": ">= 1"},
                     {"nonzero_residuals": len(ext.nonvanishing)}, len(ext.nonvanishing) >= 1)


def hilbert(run: RunConfig) -> Iterator[dict]:
    _require_valid(run)
    r = run.r
    if not 4 <= r <= 7:
        yield record("hilbert", run.inputs(), "4 <= r <= 7", f"r={r}", False)
        return
    rs = full_ideal(r, run.cfg)
    N = len(generators(r))
    for t in range(run.tmax + 1):
        hf = verify.hilbert_function(rs, t, run.tmax)
        yield record("hilbert", dict(run.inputs(), t=t), verify.hilbert_oracle(r, t, run.tmax), hf)
        if t == 2:
            yield record("hilbert_t2", dict(run.inputs(), t=2), N * (N + 1) // 2 - len(rs), hf)


def propagation(run: RunConfig, samples: int | None = None, curves: int = 5) -> Iterator[dict]:
    _require_valid(run)
    r = run.r
    if r not in (7, 8):
        yield record("propagation", run.inputs(), "r in {7, 8}", f"r={r}", False)
        return
    if samples is None:
        samples = 20 if r == 7 else 5
    rng = random.Random(run.seed)
    forms = generator_forms(run.cfg)
    rs = full_ideal(r, run.cfg, forms)
    gens = generators(r)
    ncurves = len(enumerate_negative_curves(r))
    for D in sorted(rng.sample(range(ncurves), curves)):
        ok = 0
        for _ in range(samples):
            p = verify.sample_variety_point(run.cfg, rng, forms, nonzero=[D])
            partial = {i: p[i] for i in range(ncurves)
                       if i == D or intersection(gens[i].cls, gens[D].cls) == 0}
            res = verify.propagate_dependence(D, partial, rs)
            ok += res.ok and res.valuation == p
        yield record("propagation", dict(run.inputs(), curve=gens[D].name, samples=samples),
                     samples, ok)


SUITE_FUNCS: dict[str, Callable[[RunConfig], Iterator[dict]]] = {
    "table1": table1,
    "triangles": triangle_suite,
    "golden81": golden81,
    "ranks": ranks,
    "hilbert": hilbert,
    "propagation": propagation,
}


def run_suites(which: str, run: RunConfig) -> Iterator[dict]:
    names = SUITES if which == "all" else (which,)
    for name in names:
        if name not in SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}")
        yield from SUITE_FUNCS[name](run)
