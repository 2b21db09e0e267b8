import math
from fractions import Fraction

import numpy as np
import pytest

from cesembed.lib.funcspace import (
    SpaceSpec,
    SpaceSpecError,
    StepFunction,
    StepFunctionError,
    as_exponent,
    classical_cesaro,
    classical_copson,
)
from cesembed.lib.weights import Interval, Power


def _step():
    return StepFunction((0.0, 1.0, 2.0), (3.0, 5.0))


@pytest.mark.parametrize(
    "breaks, values, message",
    [
        ((0.0,), (), "duas quebras"),
        ((0.0, 1.0), (1.0, 2.0), "Esperados 1 valores"),
        ((0.0, 2.0, 1.0), (1.0, 1.0), "crescentes"),
        ((0.0, 1.0), (-1.0,), "não negativos"),
        ((0.0, math.inf), (1.0,), "finitas"),
    ],
)
def test_step_function_validation(breaks, values, message):
    with pytest.raises(StepFunctionError, match=message):
        StepFunction(breaks, values)


def test_step_function_evaluates_to_zero_outside_support():
    f = _step()
    np.testing.assert_array_equal(f([-1.0, 0.5, 1.5, 2.0, 3.0]), [0.0, 3.0, 5.0, 0.0, 0.0])


def test_step_function_json_round_trip_and_errors():
    f = StepFunction.from_json('{"breaks": [0, 0.5, 1], "values": [1, 2]}')
    assert f == StepFunction((0.0, 0.5, 1.0), (1.0, 2.0))
    assert StepFunction.from_json(f.to_json()) == f
    with pytest.raises(StepFunctionError, match="JSON inválido"):
        StepFunction.from_json("{breaks")
    with pytest.raises(StepFunctionError, match="breaks"):
        StepFunction.from_json('{"values": [1]}')


def test_step_function_derived_constructors():
    f = _step()
    refined = f.refined()
    assert refined.n_cells == 4
    t = np.array([0.1, 0.7, 1.2, 1.9])
    np.testing.assert_array_equal(refined(t), f(t))
    assert f.reflected(0.0, 2.0).values == (5.0, 3.0)
    assert f.scaled(2.0).values == (6.0, 10.0)
    assert StepFunction.constant(2.0, 0.0, 1.0).support == (0.0, 1.0)


def test_step_function_inversion_requires_support_right_of_a():
    with pytest.raises(StepFunctionError, match="Inversão"):
        _step().inverted(0.0)
    g = StepFunction((1.0, 2.0, 4.0), (1.0, 7.0)).inverted(0.0)
    assert g.breaks == (0.25, 0.5, 1.0)
    assert g.values == (7.0, 1.0)


@pytest.mark.parametrize(
    "value, expected",
    [("3/2", Fraction(3, 2)), (0.5, Fraction(1, 2)), (2, Fraction(2)), ("inf", math.inf)],
)
def test_as_exponent_normalizes_to_rationals(value, expected):
    assert as_exponent(value) == expected


@pytest.mark.parametrize("value", [-1, 0, "abc"])
def test_as_exponent_rejects_invalid_values(value):
    with pytest.raises(SpaceSpecError):
        as_exponent(value)


def test_space_spec_quasi_norm_condition_names_endpoint():
    with pytest.raises(SpaceSpecError, match="b=inf"):
        SpaceSpec("ces", 1, 1, Power(0.0), Power(0.0), Interval(0.0, math.inf))
    with pytest.raises(SpaceSpecError, match="a=0"):
        SpaceSpec("cop", 1, 1, Power(-1.0), Power(0.0), Interval(0.0, 1.0))


def test_space_spec_rejects_weight_outside_domain():
    with pytest.raises(SpaceSpecError, match="fora do domínio"):
        SpaceSpec("ces", 1, 1, Power(-1.0, origin=1.0), Power(0.0), Interval(0.0, 2.0))


def test_space_spec_can_skip_validation():
    spec = SpaceSpec("ces", 1, 1, Power(0.0), Power(0.0), Interval(0.0, math.inf), validate=False)
    assert spec.kind == "ces"


def test_lebesgue_spec_forces_q_equal_p():
    spec = SpaceSpec.lebesgue(2, Power(1.0), Interval(0.0, 1.0))
    assert spec.q == spec.p == Fraction(2)


def test_classical_spaces_shapes():
    assert str(classical_cesaro(2)) == "ces:1,2:pow:-1,pow:0@(0,inf)"
    assert str(classical_copson(2)) == "cop:1,2:pow:0,pow:-1@(0,inf)"
