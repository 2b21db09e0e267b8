import numpy as np
import pytest

from cesembed.lib.funcspace import StepFunction, parse_spec
from cesembed.lib.oracle import (
    OracleError,
    UndefinedRatioError,
    canonical_objective,
    embedding_objective,
    ratio,
)
from cesembed.lib.reduce import EmbeddingProblem, canonicalize
from cesembed.lib.weights import Power


def _steps() -> StepFunction:
    return StepFunction((0.0, 0.25, 0.5, 1.0), (1.0, 3.0, 0.5))


@pytest.mark.parametrize(
    ("exps", "weights", "expected"),
    [
        ((1, 1, 1), {}, 1.0),
        ((1, 1, 1), {"u": Power(1.0)}, 2.0 / 3.0),
        ((2, 2, 1), {}, 1.0),
        ((1, 1, "1/2"), {}, 2.0 / 3.0),
    ],
)
def test_ratio_on_constant_function(make_canonical, exps, weights, expected):
    c = make_canonical(*exps, **weights)
    f = StepFunction((0.0, 1.0), (1.0,))
    assert ratio(c, f) == pytest.approx(expected, rel=1e-10)


def test_ratio_is_scale_invariant(make_canonical):
    c = make_canonical(2, "1/2", "1/2", u=Power(1.0))
    f = _steps()
    assert ratio(c, f.scaled(7.5)) == pytest.approx(ratio(c, f), rel=1e-10)


def test_ratio_ignores_refinement(make_canonical):
    c = make_canonical(2, 3, 1, u=Power(0.5), v=Power(1.0))
    f = _steps()
    assert ratio(c, f.refined()) == pytest.approx(ratio(c, f), rel=1e-10)


def test_ratio_undefined_for_zero(make_canonical):
    with pytest.raises(UndefinedRatioError, match="f ≡ 0"):
        ratio(make_canonical(1, 1, 1), StepFunction((0.0, 1.0), (0.0,)))


def test_ratio_rejects_support_outside_interval(make_canonical):
    with pytest.raises(OracleError):
        ratio(make_canonical(1, 1, 1), StepFunction((0.0, 2.0), (1.0,)))


def test_table_matches_exact_ratio(make_canonical):
    c = make_canonical(2, "1/2", "1/2", u=Power(1.0))
    objective = canonical_objective(c)
    breaks = np.array([0.0, 0.25, 0.5, 1.0])
    values = np.array([[1.0, 3.0, 0.5], [0.0, 1.0, 0.0], [2.0, 2.0, 2.0]])
    table = objective.table(breaks)
    expected = [objective.ratio(StepFunction.from_arrays(breaks, row)) for row in values]
    np.testing.assert_allclose(table.evaluate(values), expected, rtol=1e-10)


def test_table_zero_row_is_zero(make_canonical):
    table = canonical_objective(make_canonical(1, 1, 1)).table(np.array([0.0, 0.5, 1.0]))
    assert table.evaluate(np.zeros((1, 2)))[0] == 0.0


def test_original_ratio_matches_canonical_ratio():
    # com v1 = 1: razão original^{p1} = razão canônica em f^{p1}
    e = EmbeddingProblem(
        parse_spec("ces:2,3:pow:0,pow:0@(0,1)"), parse_spec("ces:4,6:pow:1,pow:0@(0,1)")
    )
    c, p1 = canonicalize(e)
    f = _steps()
    original = embedding_objective(e).ratio(f)
    assert original ** float(p1) == pytest.approx(
        canonical_objective(c).ratio(f.power(float(p1))), rel=1e-8
    )


def test_embedding_objective_rejects_infinite_exponents():
    e = EmbeddingProblem(
        parse_spec("ces:inf,1:pow:0,pow:0@(0,1)"), parse_spec("ces:1,1:pow:0,pow:0@(0,1)")
    )
    with pytest.raises(OracleError, match="finitos"):
        embedding_objective(e)
