import random

import pytest
from hypothesis import given, settings, strategies as st

from coxring.fields import QQ
from coxring.picard import DivisorClass, generators, intersection
from coxring.plane import PointConfiguration, validate_general_position
from coxring.relations import full_ideal
from coxring.verify import (
    Valuation,
    hilbert_function,
    hilbert_oracle,
    jacobian_rank,
    propagate_dependence,
    sample_variety_point,
    singular_witness_r7,
    smooth_point,
)
from conftest import F101, F32003, config

NAMES6 = {g.name: g.id for g in generators(6)}


def test_r6_smooth_point(ideals):
    rs = ideals(6)
    p = smooth_point(6, rs.cfg)
    rep = jacobian_rank(rs, p)
    assert rep.residuals_zero and rep.rank == 18 == 27 - (6 + 3)
    # eta_5 = a(b-1), eta_6 = c(d-1) for (a, b, c, d) = (2, 3, 5, 7)
    assert (p[NAMES6["E5"]], p[NAMES6["E6"]]) == (4, 30)
    assert set(p.nonzero()) == {"E5", "E6", "m12", "m14", "m23", "m34", "Q5", "Q6"}


def test_r6_printed_point_breaks_m56_relations(ideals):
    # the coordinate list as printed (eta_5 = c(d-1) = 30, eta_6 = a(b-1) = 4)
    rs = ideals(6)
    p = smooth_point(6, rs.cfg, as_printed=True)
    assert (p[NAMES6["E5"]], p[NAMES6["E6"]]) == (30, 4)
    rep = jacobian_rank(rs, p)
    bad = {rs.relations[i].cls for i in rep.nonvanishing}
    assert len(rep.nonvanishing) == 2
    assert bad == {DivisorClass((3,) + (-1,) * 6) - DivisorClass((1, 0, 0, 0, 0, -1, -1))}


@settings(max_examples=8, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=4, max_size=4))
def test_r6_smooth_point_any_config(params):
    cfg = PointConfiguration.from_params(QQ, params)
    if validate_general_position(cfg) is not None:
        return
    rep = jacobian_rank(full_ideal(6, cfg), smooth_point(6, cfg))
    assert rep.residuals_zero and rep.rank == 18


def test_r8_smooth_point(ideals):
    rs = ideals(8)
    rep = jacobian_rank(rs, smooth_point(8, rs.cfg))
    assert rep.residuals_zero and rep.rank == 231 == 242 - (8 + 3)
    assert rep.rows == 17399 and rep.cols == 242


def test_smooth_point_errors():
    with pytest.raises(ValueError):
        smooth_point(7, config(7, F101))
    with pytest.raises(ValueError):
        smooth_point(8, config(7, F101))
    # alpha_7 = alpha_8 makes alpha vanish
    cfg = PointConfiguration.from_params(F32003, (2, 3, 5, 7, 13, 17, 13, 23))
    with pytest.raises(ValueError, match="different configuration"):
        smooth_point(8, cfg)


def test_singular_witness_r7(ideals):
    rs = ideals(7)
    q = singular_witness_r7(F101)
    assert q.nonzero() == {"E1": 1, "C1": 1}
    ruling = [x for b in rs.blocks if b.ruling.order == 1 for x in b.relations]
    extra = [x for b in rs.blocks if b.ruling.order == 2 for x in b.relations]
    rep = jacobian_rank(rs, q, ruling)
    assert rep.residuals_zero and rep.rank == 54
    # tangent space of dimension 2 at q, below the 7 + 3 of the Cox variety
    assert 56 - rep.rank == 2 < 7 + 3
    assert len(jacobian_rank(rs, q, extra).nonvanishing) >= 1


def test_valuation_checks(ideals):
    with pytest.raises(ValueError):
        Valuation(6, QQ, (0,) * 26)
    with pytest.raises(ValueError):
        jacobian_rank(ideals(6), Valuation(6, F101, (0,) * 27))


def test_sample_points_lie_on_variety(ideals):
    rs = ideals(7)
    rng = random.Random(5)
    p = sample_variety_point(rs.cfg, rng)
    assert jacobian_rank(rs, p).residuals_zero
    assert all(x != 0 for x in p.values[:7])


def erase(p, D):
    gens = generators(p.r)
    return {i: p[i] for i in range(len(gens)) if not gens[i].is_kappa
            and (i == D or intersection(gens[i].cls, gens[D].cls) == 0)}


@pytest.mark.parametrize("D", [0, 7, 28, 49])
def test_propagation_r7(D, ideals):
    rs = ideals(7)
    rng = random.Random(D)
    for _ in range(3):
        p = sample_variety_point(rs.cfg, rng, nonzero=[D])
        res = propagate_dependence(D, erase(p, D), rs)
        assert res.ok and res.valuation == p
        assert len(res.order) == 56 - 1 - 27


def test_propagation_r8_kappa_first(ideals):
    rs = ideals(8)
    gens = generators(8)
    p = sample_variety_point(rs.cfg, random.Random(2), nonzero=[0])
    res = propagate_dependence(0, erase(p, 0), rs)
    assert res.ok and res.valuation == p
    k = res.order.index(240)
    assert res.order[k + 1] == 241
    assert all(intersection(gens[i].cls, gens[0].cls) == 1 for i in res.order[:k])
    assert all(intersection(gens[i].cls, gens[0].cls) >= 2 for i in res.order[k + 2:])
    assert intersection(gens[res.order[-1]].cls, gens[0].cls) == 3


def test_propagation_errors(ideals):
    rs = ideals(7)
    p = sample_variety_point(rs.cfg, random.Random(0), nonzero=[0])
    part = erase(p, 0)
    with pytest.raises(ValueError):
        propagate_dependence(0, {**part, 0: 0}, rs)
    part.pop(next(i for i in part if i != 0))
    with pytest.raises(KeyError):
        propagate_dependence(0, part, rs)
    with pytest.raises(ValueError):
        propagate_dependence(0, {0: 1}, ideals(6))


@pytest.mark.parametrize("r", [4, 5, 6])
def test_hilbert_matches_oracle(r, ideals):
    rs = ideals(r)
    N = len(generators(r))
    assert hilbert_function(rs, 0) == hilbert_oracle(r, 0) == 1
    assert hilbert_function(rs, 1) == hilbert_oracle(r, 1) == N
    assert hilbert_function(rs, 2) == hilbert_oracle(r, 2) == N * (N + 1) // 2 - len(rs)
    assert hilbert_function(rs, 3) == hilbert_oracle(r, 3)


def test_hilbert_values(ideals):
    assert hilbert_function(ideals(6), 2) == 378 - 81 == 297


def test_hilbert_guards(ideals):
    with pytest.raises(ValueError, match="desk scale"):
        hilbert_function(ideals(6), 4)
    with pytest.raises(ValueError, match="desk scale"):
        hilbert_function(ideals(6), 3, max_monomials=100)
    with pytest.raises(ValueError):
        hilbert_oracle(8, 2)
    with pytest.raises(ValueError):
        hilbert_function(ideals(8), 2)
    assert hilbert_oracle(6, 4, tmax=4) > 0
