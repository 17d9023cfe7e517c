import random

import pytest
from hypothesis import given, settings, strategies as st

from coxring.fields import QQ
from coxring.picard import DivisorClass, generators
from coxring.plane import (
    DegenerateConfigurationError,
    PointConfiguration,
    generator_forms,
    validate_general_position,
)
from coxring.relations import (
    QuadraticRelation,
    evaluate_relation,
    full_ideal,
    relation_string,
    relations_for_ruling,
    ruling_ranks,
    span_contains,
)
from coxring.rulings import Ruling, enumerate_rulings
from coxring.verify import golden_cubic_relations, screened_denominators, smooth_point
from conftest import F101, F32003, config

SIZES = {4: 5, 5: 20, 6: 81, 7: 529, 8: 17399}


@pytest.mark.parametrize("r", [4, 5, 6, 7, 8])
def test_ideal_sizes_and_blocks(r, ideals):
    rs = ideals(r)
    assert len(rs) == SIZES[r]
    for b in rs.blocks:
        k, n = len(b.ruling.representations), b.ruling.order
        assert b.rank == n + 1
        assert len(b.relations) == k - (n + 1)
    if r == 7:
        assert rs.counts_by_order() == {1: 504, 2: 25}
    if r == 8:
        assert rs.counts_by_order() == {1: 10800, 2: 6480, 3: 119}


@pytest.mark.parametrize("r", [5, 6, 7])
def test_relations_vanish_on_plane_sections(r, ideals):
    # independent of the kernel computation: evaluate the forms at plane points
    rs = ideals(r)
    forms = generator_forms(rs.cfg)
    F = rs.field
    rng = random.Random(r)
    for _ in range(3):
        s = tuple(F(rng.randint(-50, 50)) for _ in range(3))
        vals = [f(s) for f in forms]
        assert all(evaluate_relation(q, vals, F) == 0 for q in rs.relations)


def test_r8_relations_vanish_on_plane_sections(ideals):
    rs = ideals(8)
    forms = generator_forms(rs.cfg)
    vals = [f((5, 11, 29)) for f in forms]
    assert all(evaluate_relation(q, vals, F32003) == 0 for q in rs.relations)


def test_kappa_placement(ideals):
    rs = ideals(8)
    for b in rs.blocks:
        for q in b.relations:
            kap = [m for _, m in q.terms() if max(m) >= 240]
            if b.ruling.order == 1:
                assert not kap
            if b.ruling.order == 2:
                assert all(m[0] < 240 <= m[1] for m in kap)
    kappa_blocks = {b.ruling.order for b in rs.blocks for q in b.relations
                    for _, m in q.terms() if max(m) >= 240}
    assert kappa_blocks == {2, 3}


def test_reduced_echelon(ideals):
    for b in ideals(6).blocks:
        pivots = [next(j for j, c in enumerate(q.coeffs) if c != 0) for q in b.relations]
        assert pivots == sorted(set(pivots))
        for q, p in zip(b.relations, pivots):
            assert q.coeffs[p] == 1
            assert all(o.coeffs[p] == 0 for o in b.relations if o is not q)


def test_q_reduces_to_fp(ideals):
    rq = ideals(6)
    rp = full_ideal(6, config(6, F32003))
    for a, b in zip(rq.relations, rp.relations):
        assert tuple(F32003(c) for c in a.coeffs) == b.coeffs


def test_golden_cubic_relations():
    report = golden_cubic_relations((2, 3, 5, 7), QQ)
    assert len(report) == 81
    assert [ln.label for ln in report if not ln.in_span] == []
    assert report[0].label == "Q1 1"


def test_golden_over_fp():
    report = golden_cubic_relations((2, 3, 5, 7), F32003)
    assert all(ln.in_span for ln in report)


def test_golden_rejects_special_position():
    # E = (b-1)(c-1) - (a-1)(d-1) vanishes for (2, 3, 3, 5): p4, p5, p6 collinear
    with pytest.raises(ValueError, match="general position"):
        golden_cubic_relations((2, 3, 3, 5), QQ)


@settings(max_examples=200)
@given(st.lists(st.integers(-20, 20), min_size=4, max_size=4))
def test_screened_denominators_follow_from_general_position(params):
    # each denominator is a collinearity determinant: b (p1 p2 p5), a-c (p3 p5 p6),
    # c-1 (p3 p4 p6), E (p4 p5 p6), ...
    cfg = PointConfiguration.from_params(QQ, params)
    if validate_general_position(cfg) is None:
        a, b, c, d = params
        assert all(v != 0 for v in screened_denominators(a, b, c, d, QQ).values())
        assert b * c - a * d != 0


def test_span_contains_basics(ideals):
    rs = ideals(6)
    b = rs.blocks[0]
    R = b.ruling
    k = len(R.representations)
    assert span_contains(R, [0] * k, rs.cfg)
    q = list(b.relations[0].coeffs)
    assert span_contains(R, q, rs.cfg)
    q[0] += 1
    assert not span_contains(R, q, rs.cfg)
    with pytest.raises(ValueError):
        span_contains(R, [0] * (k + 1), rs.cfg)


def test_span_is_basis_independent(ideals):
    rs = ideals(7)
    rng = random.Random(0)
    for b in rs.blocks[::10]:
        combo = [0] * len(b.ruling.representations)
        for q in b.relations:
            c = rng.randrange(101)
            combo = [(x + c * y) % 101 for x, y in zip(combo, q.coeffs)]
        assert span_contains(b.ruling, combo, rs.cfg)


def test_permuted_monomial_order(ideals):
    rs = ideals(7)
    b = rs.block_for(DivisorClass((3,) + (-1,) * 7))
    R = b.ruling
    perm = list(range(len(R.representations)))
    random.Random(1).shuffle(perm)
    Rp = Ruling(R.cls, R.order, tuple(R.representations[i] for i in perm))
    for q in relations_for_ruling(Rp, rs.cfg):
        back = [0] * len(perm)
        for pos, i in enumerate(perm):
            back[i] = q.coeffs[pos]
        assert span_contains(R, back, rs.cfg)


def test_r8_h_minus_e3_equations():
    F = F32003
    cfg = config(8, F)
    a1, a2, a3, a4 = (cfg.alpha(j) for j in (5, 6, 7, 8))
    d = lambda x, y: F.div(F.norm(x), F.norm(y))
    names = {g.name: g.id for g in generators(8)}
    # coefficients of (eta_j mu_3j, eta_7 mu_37, eta_8 mu_38)
    printed = [
        ("E1", "m13", -d(a3 * a4, a3 - a4), d(a3 * a4, a3 - a4)),
        ("E2", "m23", -d(a3, a3 - a4), d(a4, a3 - a4)),
        ("E4", "m34", d(a3 * a4 - a3, a3 - a4), d(-a3 * a4 + a4, a3 - a4)),
        ("E5", "m35", d(-a1 * a3 + a3 * a4, a1 * a3 - a1 * a4), d(a1 * a4 - a3 * a4, a1 * a3 - a1 * a4)),
        ("E6", "m36", d(-a2 * a3 + a3 * a4, a2 * a3 - a2 * a4), d(a2 * a4 - a3 * a4, a2 * a3 - a2 * a4)),
    ]
    R = next(R for R in enumerate_rulings(8, 1) if R.cls == DivisorClass((1, 0, 0, -1, 0, 0, 0, 0, 0)))
    forms = generator_forms(cfg)
    p = smooth_point(8, cfg, forms=forms)
    for e, m, c7, c8 in printed:
        v = [0] * 7
        for (g1, g2), c in [((e, m), 1), (("E7", "m37"), c7), (("E8", "m38"), c8)]:
            v[R.representations.index(tuple(sorted((names[g1], names[g2]))))] = c
        assert span_contains(R, v, cfg, forms)
        q = QuadraticRelation(R, tuple(v))
        assert evaluate_relation(q, p.values, F) == 0


def test_ruling_ranks():
    assert all(k == R.order + 1 for R, k in ruling_ranks(7, config(7, F101)))


def test_evaluate_relation(ideals):
    rs = ideals(6)
    q = rs.relations[0]
    assert evaluate_relation(q, [0] * 27, QQ) == 0
    with pytest.raises(KeyError):
        evaluate_relation(q, {}, QQ)
    s = relation_string(q, QQ)
    assert "*" in s and "E" in s


def test_degenerate_configuration():
    with pytest.raises(DegenerateConfigurationError):
        full_ideal(6, PointConfiguration.from_params(QQ, (2, 3, 4, 6)))
    with pytest.raises(ValueError):
        full_ideal(3, PointConfiguration.from_params(QQ, (), r=3))
    with pytest.raises(ValueError):
        full_ideal(7, config(6))
