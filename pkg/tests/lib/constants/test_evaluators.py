import math

import pytest
from scipy.integrate import quad
from scipy.optimize import minimize_scalar

from cesembed.lib.constants import (
    CONSTANT_REGISTRY,
    ConstantsError,
    RegimeMisuseError,
    eval_C1,
    eval_C2,
    eval_C3,
    eval_C4,
    eval_C5,
    eval_C6,
    eval_C7,
    evaluate_constant,
    fubini_constant,
    register_constant,
)
from cesembed.lib.weights import Power, constant

# (avaliador, (p, q, r), pesos, intervalo)
_WORKED = {
    "C1": (eval_C1, (1, 1, 1), {"u": Power(-2.0), "w": Power(-2.0)}, (1.0, math.inf)),
    "C2": (eval_C2, ("1/2", "1/2", 1), {}, (0.0, 1.0)),
    "C3": (eval_C3, (2, 2, 1), {}, (0.0, 1.0)),
    "C4": (eval_C4, (1, "1/2", 1), {}, (0.0, 1.0)),
    "C5": (eval_C5, (1, "1/2", 1), {}, (0.0, 1.0)),
    "C6": (eval_C6, (2, "1/2", 1), {}, (0.0, 1.0)),
    "C7": (eval_C7, (2, 1, 1), {}, (0.0, 1.0)),
}


def _worked(make_canonical, name):
    fn, exps, weights, interval = _WORKED[name]
    return fn, make_canonical(*exps, interval=interval, **weights)


def _c6_reference() -> float:
    """Mesma expressão de C6 com p = 2, q = 1/2, r = 1 e pesos unitários em (0, 1)."""

    def middle(y: float, x: float) -> float:
        drop = 0.75 * ((1 - y) ** (4 / 3) - (1 - x) ** (4 / 3))
        left = y / (1 - y)
        return drop / (1 - y) * left ** (1 / 3)

    def envelope(x: float) -> float:
        res = minimize_scalar(
            lambda y: -middle(y, x), bounds=(0.0, x), method="bounded", options={"xatol": 1e-12}
        )
        return -res.fun

    total, _ = quad(envelope, 0.0, 1.0, limit=200)
    return total**1.5


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("C1", 1.0),
        ("C2", 0.5),
        ("C3", 1.0),
        ("C4", 1.0),
        ("C5", 1.0 / 6.0),
        ("C7", 1.0 / math.sqrt(3.0)),
    ],
)
def test_worked_constants(make_canonical, name, expected):
    fn, c = _worked(make_canonical, name)
    assert fn(c) == pytest.approx(expected, rel=1e-2)


def test_c6_matches_direct_evaluation(make_canonical):
    fn, c = _worked(make_canonical, "C6")
    assert fn(c) == pytest.approx(_c6_reference(), rel=1e-3)


@pytest.mark.parametrize("name", sorted(_WORKED))
def test_homogeneity(make_canonical, fast_numerics, name):
    fn, c = _worked(make_canonical, name)
    p, q, r = c.exponents
    base = fn(c, fast_numerics)
    scaled = fn(c.scaled(lam=3.0, mu=5.0, nu=7.0), fast_numerics)
    factor = 3.0 ** (-1.0 / p) * 5.0 ** (1.0 / q) * 7.0 ** (1.0 / r)
    assert scaled == pytest.approx(factor * base, rel=1e-6)


def test_c1_doubles_with_inner_weight(make_canonical):
    c = make_canonical(1, 1, 1, u=Power(-2.0), w=Power(-2.0), v=constant(2.0), interval=(1.0, math.inf))
    assert eval_C1(c) == pytest.approx(2.0, rel=1e-2)


def test_c1_divergent_tail(make_canonical):
    c = make_canonical(1, 1, 1, w=Power(-2.0), interval=(0.0, math.inf))
    assert eval_C1(c) == math.inf


def test_c5_doubling_u(make_canonical):
    _, c = _worked(make_canonical, "C5")
    assert eval_C5(c.scaled(mu=2.0)) == pytest.approx(4.0 / 6.0, rel=1e-2)


@pytest.mark.parametrize(
    ("fn", "exps", "match"),
    [
        (eval_C2, (1, 1, 1), "q < 1"),
        (eval_C3, (1, 2, 1), "r < p"),
        (eval_C4, (1, 1, 1), "q < p"),
        (eval_C5, (2, 1, 1), "q < 1"),
        (eval_C6, (1, "1/2", 1), "r < p"),
        (eval_C7, (2, "1/2", 1), "q >= 1"),
        (fubini_constant, (2, 2, 1), "p = q = r = 1"),
    ],
)
def test_constants_outside_their_range(make_canonical, fn, exps, match):
    with pytest.raises(RegimeMisuseError, match=match):
        fn(make_canonical(*exps))


def test_evaluate_constant_by_name(make_canonical):
    _, c = _worked(make_canonical, "C2")
    assert evaluate_constant(" c2 ", c) == pytest.approx(0.5, rel=1e-2)


def test_evaluate_constant_unknown(make_canonical):
    with pytest.raises(ConstantsError, match="não suportada"):
        evaluate_constant("C9", make_canonical(1, 1, 1))


def test_register_constant(monkeypatch, make_canonical):
    monkeypatch.setitem(CONSTANT_REGISTRY, "C8", None)
    register_constant("C8", lambda c, cfg: 42.0)
    assert evaluate_constant("c8", make_canonical(1, 1, 1)) == 42.0


@pytest.mark.parametrize(("name", "fn"), [("", eval_C1), ("C8", 3.0)])
def test_register_constant_rejects(name, fn):
    with pytest.raises(ConstantsError):
        register_constant(name, fn)


# (pesos, intervalo, sup_s v(s)·U(s)/W(s))
_FUBINI = [
    ({}, (0.0, 1.0), 1.0),
    ({"u": Power(1.0)}, (0.0, 1.0), 1.0),
    ({"u": Power(2.0)}, (0.0, 1.0), 1.0),
    ({"w": Power(1.0)}, (0.0, 1.0), 2.0),
    ({"v": Power(1.0)}, (0.0, 1.0), 1.0),
    ({"v": constant(2.0)}, (0.0, 1.0), 2.0),
    ({"u": Power(-2.0), "w": Power(-2.0)}, (1.0, math.inf), 1.0),
    ({"u": Power(-3.0), "w": Power(-2.0), "v": Power(0.5)}, (1.0, math.inf), 0.5),
    ({"u": Power(-2.0), "w": Power(-2.0), "v": constant(3.0)}, (1.0, math.inf), 3.0),
    ({"u": Power(-2.0), "w": Power(-2.0), "v": Power(-1.0)}, (1.0, math.inf), 1.0),
]


@pytest.mark.parametrize(("weights", "interval", "expected"), _FUBINI)
def test_fubini_closed_form(make_canonical, weights, interval, expected):
    c = make_canonical(1, 1, 1, interval=interval, **weights)
    assert fubini_constant(c) == pytest.approx(expected, rel=1e-4)


@pytest.mark.parametrize(("weights", "interval", "expected"), _FUBINI)
def test_fubini_bound_below_c1(make_canonical, weights, interval, expected):
    c = make_canonical(1, 1, 1, interval=interval, **weights)
    exact = fubini_constant(c)
    assert math.isfinite(exact)
    assert exact <= eval_C1(c) * (1 + 1e-6)
