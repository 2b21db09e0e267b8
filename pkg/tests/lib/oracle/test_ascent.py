import math

import numpy as np
import pandas as pd
import pytest

from cesembed.lib.constants import fubini_constant
from cesembed.lib.funcspace import parse_spec
from cesembed.lib.oracle import (
    TRACE_COLUMNS,
    OracleConfig,
    OracleError,
    ascend,
    canonical_objective,
    estimate_best_constant,
    estimate_original_constant,
    rung_breaks,
    witness_candidates,
    witness_lower_bound,
)
from cesembed.lib.reduce import EmbeddingProblem, canonicalize, tilde_transform
from cesembed.lib.weights import Power, constant


def _regime_i(make_canonical):
    return make_canonical(1, 1, 1, u=Power(-2.0), w=Power(-2.0), interval=(1.0, math.inf))


def test_witness_candidates_are_blocks():
    chi = witness_candidates(4)
    assert chi.shape == (10, 4)
    for row in chi:
        ones = np.flatnonzero(row)
        assert ones.size > 0
        assert np.all(np.diff(ones) == 1)
        assert set(np.unique(row)) <= {0.0, 1.0}


def test_witness_candidates_with_density():
    density = np.array([1.0, 2.0, 3.0, 4.0])
    rows = witness_candidates(4, density)
    assert rows.shape == (20, 4)
    np.testing.assert_array_equal(rows[10:], rows[:10] * density)


def test_ascend_never_decreases(make_canonical):
    c = make_canonical(2, "1/2", 1, u=Power(1.0))
    table = canonical_objective(c).table(rung_breaks((0.01, 0.99), c.interval, 8))
    x0 = np.zeros(8)
    start = math.log(table.evaluate(np.ones(8))[0])
    _, value = ascend(table, x0, OracleConfig(grid_size=8, restarts=1, ascent_iters=50))
    assert value >= start


def test_identity_ratio_is_one(make_canonical, small_oracle_cfg):
    result = estimate_best_constant(_regime_i(make_canonical), small_oracle_cfg)
    assert result.best_ratio == pytest.approx(1.0, rel=1e-9)
    assert not result.diverging
    assert list(result.trace.columns) == TRACE_COLUMNS
    assert len(result.trace) == small_oracle_cfg.ladder_rungs
    assert max(result.argmax.values) == pytest.approx(1.0)


@pytest.mark.parametrize(
    ("weights", "interval"),
    [
        ({}, (0.0, 1.0)),
        ({"u": Power(1.0)}, (0.0, 1.0)),
        ({"u": Power(2.0)}, (0.0, 1.0)),
        ({"w": Power(1.0)}, (0.0, 1.0)),
        ({"v": Power(1.0)}, (0.0, 1.0)),
        ({"v": constant(2.0)}, (0.0, 1.0)),
        ({"u": Power(-2.0), "w": Power(-2.0)}, (1.0, math.inf)),
        ({"u": Power(-3.0), "w": Power(-2.0), "v": Power(0.5)}, (1.0, math.inf)),
        ({"u": Power(-2.0), "w": Power(-2.0), "v": constant(3.0)}, (1.0, math.inf)),
        ({"u": Power(-2.0), "w": Power(-2.0), "v": Power(-1.0)}, (1.0, math.inf)),
    ],
)
def test_fubini_configs(make_canonical, small_oracle_cfg, weights, interval):
    c = make_canonical(1, 1, 1, interval=interval, **weights)
    result = estimate_best_constant(c, small_oracle_cfg)
    assert result.best_ratio == pytest.approx(fubini_constant(c), rel=2e-2)
    assert not result.diverging


def test_witness_bound_is_a_lower_bound(make_canonical, small_oracle_cfg):
    c = make_canonical(1, 1, 1, u=Power(1.0))
    bound = witness_lower_bound(c, small_oracle_cfg)
    assert bound >= 0.5
    assert bound <= estimate_best_constant(c, small_oracle_cfg).best_ratio * (1 + 1e-9)


def test_trivial_exponent_diverges(make_canonical, small_oracle_cfg):
    c = make_canonical(1, 1, 2)
    result = estimate_best_constant(c, small_oracle_cfg.with_overrides(rung_refinement=1e-3))
    assert result.diverging
    rungs = result.rungs
    assert rungs[0] < rungs[1] < rungs[2]


def test_homogeneity_of_best_ratio(make_canonical, small_oracle_cfg):
    c = make_canonical(1, 1, 1, u=Power(1.0))
    base = estimate_best_constant(c, small_oracle_cfg).best_ratio
    scaled = estimate_best_constant(c.scaled(lam=3.0, mu=5.0, nu=7.0), small_oracle_cfg)
    assert scaled.best_ratio == pytest.approx(base * 5.0 * 7.0 / 3.0, rel=2e-2)


def test_same_seed_same_trace(make_canonical, small_oracle_cfg):
    c = make_canonical(2, "1/2", 1, u=Power(1.0))
    first = estimate_best_constant(c, small_oracle_cfg)
    second = estimate_best_constant(c, small_oracle_cfg)
    pd.testing.assert_frame_equal(first.trace, second.trace)
    assert first.best_ratio == second.best_ratio


def test_original_identity_embedding(small_oracle_cfg):
    spec = parse_spec("cop:1,2:pow:0,pow:0@(0,1)")
    result = estimate_original_constant(EmbeddingProblem(spec, spec), small_oracle_cfg)
    assert result.best_ratio == pytest.approx(1.0, rel=1e-9)


def test_original_rejects_infinite_exponents(small_oracle_cfg):
    e = EmbeddingProblem(
        parse_spec("ces:1,inf:pow:0,pow:0@(0,1)"), parse_spec("ces:1,1:pow:0,pow:0@(0,1)")
    )
    with pytest.raises(OracleError, match="finitos"):
        estimate_original_constant(e, small_oracle_cfg)


def test_explicit_ladder_is_used(make_canonical, small_oracle_cfg):
    c = make_canonical(1, 1, 1, u=Power(1.0), interval=(0.0, 2.0))
    cfg = small_oracle_cfg.with_overrides(truncation_ladder=((0.5, 1.5), (0.1, 1.9)))
    result = estimate_best_constant(c, cfg)
    assert [domain for domain, _, _ in result.ladder_trace] == [(0.5, 1.5), (0.1, 1.9)]


def test_cop_cop_constant_survives_tilde_transform(small_oracle_cfg):
    e = EmbeddingProblem(
        parse_spec("cop:1,2:pow:0,pow:0@(0,1)"), parse_spec("cop:1,2:pow:1,pow:0@(0,1)")
    )
    image = tilde_transform(e)
    assert image.kinds == ("ces", "ces")
    before = estimate_original_constant(e, small_oracle_cfg)
    after = estimate_original_constant(image, small_oracle_cfg)
    assert math.isfinite(before.best_ratio)
    assert not before.diverging
    assert after.best_ratio == pytest.approx(before.best_ratio, rel=5e-2)


# v1 = 1 e p1 = q1 = p2 = q2: f ↦ f^{p1} preserva a grade e a forma canônica é linear
@pytest.mark.parametrize(
    ("source", "target"),
    [
        ("ces:2,2:pow:0,pow:0@(0,1)", "ces:2,2:pow:1,pow:0@(0,1)"),
        ("ces:3,3:pow:-1,pow:0@(1,inf)", "ces:3,3:pow:-4/3,pow:0@(1,inf)"),
    ],
)
def test_original_constant_matches_canonical_constant(small_oracle_cfg, source, target):
    e = EmbeddingProblem(parse_spec(source), parse_spec(target))
    c, p1 = canonicalize(e)
    original = estimate_original_constant(e, small_oracle_cfg)
    canonical = estimate_best_constant(c, small_oracle_cfg)
    assert not canonical.diverging
    assert original.best_ratio ** float(p1) == pytest.approx(canonical.best_ratio, rel=3e-2)
