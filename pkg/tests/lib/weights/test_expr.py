import math

import numpy as np
import pytest

from cesembed.lib.weights import (
    Piecewise,
    Power,
    PowerLog,
    PowerOf,
    Product,
    Scaled,
    WeightDomainError,
    WeightParameterError,
    constant,
    integrable_near,
    power_integral,
    simplify,
)


def test_power_evaluates_with_origin_and_orientation():
    assert float(Power(2.0)(3.0)) == 9.0
    assert float(Power(1.0, 2.0, reflected=True)(0.5)) == pytest.approx(1.5)
    assert Power(1.0, origin=1.0).domain() == (1.0, math.inf)
    assert Power(1.0, 2.0, reflected=True).domain() == (-math.inf, 2.0)


@pytest.mark.parametrize(
    "expr, expected",
    [
        (Product(Power(1.0), Power(2.0)), Power(3.0)),
        (Scaled(2.0, Scaled(3.0, Power(1.0))), Scaled(6.0, Power(1.0))),
        (PowerOf(Power(-1.0), 2.0), Power(-2.0)),
        (Product(Power(0.0), PowerLog(1.0, 1.0)), PowerLog(1.0, 1.0)),
        (PowerOf(Scaled(4.0, Power(2.0)), 0.5), Scaled(2.0, Power(1.0))),
    ],
)
def test_simplify_merges_same_origin_powers(expr, expected):
    assert simplify(expr) == expected


def test_simplify_preserves_values():
    w = Product(
        Scaled(3.0, PowerOf(Power(1.0), 2.0)),
        Product(Power(-0.5, 1.0, reflected=True), PowerLog(0.0, 1.0)),
    )
    t = np.linspace(0.05, 0.95, 7)
    np.testing.assert_allclose(simplify(w)(t), w(t), rtol=1e-12)


def test_piecewise_requires_tiling():
    with pytest.raises(WeightParameterError, match="ladrilhar"):
        Piecewise(((0.0, 1.0, Power(0.0)), (2.0, 3.0, Power(0.0))))


def test_check_contains_rejects_subinterval_outside_domain():
    with pytest.raises(WeightDomainError, match="fora do domínio"):
        Power(-1.0, origin=1.0).check_contains(0.0, 2.0)


def test_constant_weight():
    np.testing.assert_array_equal(constant(3.0)(np.array([1.0, 2.0])), [3.0, 3.0])


def test_power_limit_at_singular_origin():
    assert float(Power(-1.0).limit(np.asarray(0.0))) == math.inf
    assert float(Power(2.0).limit(np.asarray(0.0))) == 0.0
    assert float(Power(-1.0).limit(np.asarray(math.inf))) == 0.0


@pytest.mark.parametrize(
    "order, e, at_infinity, expected",
    [
        ((-1.0, 0.0), 1.0, False, False),
        ((-0.5, 0.0), 1.0, False, True),
        ((-0.5, 0.0), 2.0, False, False),
        ((-2.0, 0.0), 1.0, True, True),
        ((-1.0, 0.0), 1.0, True, False),
        ((-1.0, -2.0), 1.0, True, True),
        (None, 1.0, True, None),
    ],
)
def test_integrable_near(order, e, at_infinity, expected):
    assert integrable_near(order, e, at_infinity) is expected


def test_power_integral_closed_forms():
    assert float(power_integral(-2.0, 1.0, math.inf)) == pytest.approx(1.0)
    assert float(power_integral(-1.0, 0.0, 1.0)) == math.inf
    assert float(power_integral(2.0, 0.0, 3.0)) == pytest.approx(9.0)
    assert float(power_integral(1.0, 2.0, 1.0)) == 0.0
