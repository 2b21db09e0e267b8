import math
from fractions import Fraction

import pytest

from cesembed.lib.funcspace import parse_spec
from cesembed.lib.reduce import (
    TRIVIAL_VERDICT,
    CanonicalProblem,
    EmbeddingProblem,
    HypothesisViolationError,
    ReductionError,
    UnsupportedProblemError,
    canonicalize,
    degenerate_sides,
    detect_degenerate,
    triviality_check,
)
from cesembed.lib.weights import Interval, Power, constant, is_unit

UNIT = Interval(0.0, 1.0)


def _problem(source: str, target: str) -> EmbeddingProblem:
    return EmbeddingProblem(parse_spec(source), parse_spec(target))


def _canonical(p, q, r, interval=UNIT, **kw) -> CanonicalProblem:
    return CanonicalProblem(p, q, r, constant(), constant(), constant(), interval, **kw)


def test_canonicalize_maps_exponents_and_weights():
    e = _problem("ces:2,3:pow:0,pow:0@(0,1)", "ces:4,6:pow:1,pow:0@(0,1)")
    c, p1 = canonicalize(e)
    assert (c.p, c.q, c.r) == (Fraction(3, 2), Fraction(3), Fraction(2))
    assert p1 == 2
    assert c.u == Power(6.0)
    assert is_unit(c.v)
    assert is_unit(c.w)
    assert c.interval == UNIT


def test_canonicalize_inner_weight_combines_both_sides():
    e = _problem("ces:1,1:pow:0,pow:1@(0,1)", "ces:1,2:pow:0,pow:2@(0,1)")
    c, _ = canonicalize(e)
    assert c.v(0.5) == pytest.approx(0.5)


@pytest.mark.parametrize(
    ("source", "target", "match"),
    [
        ("cop:1,1:pow:0,pow:0@(0,1)", "ces:1,1:pow:0,pow:0@(0,1)", "Ces"),
        ("ces:1,1:pow:0,pow:0@(0,1)", "leb:1:pow:0@(0,1)", "Ces"),
        ("ces:inf,1:pow:0,pow:0@(0,1)", "ces:1,1:pow:0,pow:0@(0,1)", "finitos"),
    ],
)
def test_canonicalize_rejects_unsupported(source, target, match):
    with pytest.raises(UnsupportedProblemError, match=match):
        canonicalize(_problem(source, target))


def test_embedding_requires_same_interval():
    with pytest.raises(ReductionError, match="intervalos diferentes"):
        _problem("ces:1,1:pow:0,pow:0@(0,1)", "ces:1,1:pow:0,pow:0@(0,2)")


def test_hypothesis_violation():
    with pytest.raises(HypothesisViolationError, match="exige"):
        _canonical(1, 1, 1, Interval(1.0, math.inf))


def test_hypothesis_check_can_be_skipped():
    c = _canonical(1, 1, 1, Interval(1.0, math.inf), check=False)
    with pytest.raises(HypothesisViolationError):
        c.check_hypothesis()


@pytest.mark.parametrize(
    ("p", "match"),
    [(math.inf, "finito"), (-1, "inválido"), ("x", "inválido")],
)
def test_canonical_rejects_bad_exponents(p, match):
    with pytest.raises(UnsupportedProblemError, match=match):
        _canonical(p, 1, 1)


def test_exponents_stay_rational():
    c = _canonical(0.5, "3/2", 1)
    assert c.p == Fraction(1, 2)
    assert c.q == Fraction(3, 2)
    assert c.exponents == (0.5, 1.5, 1.0)


def test_scaled_multiplies_weights():
    c = _canonical(1, 1, 1).scaled(lam=3.0, mu=5.0, nu=7.0)
    assert c.w(0.5) == pytest.approx(3.0)
    assert c.u(0.5) == pytest.approx(5.0)
    assert c.v(0.5) == pytest.approx(7.0)


def test_summary():
    summary = _canonical(2, 1, 1).summary()
    assert summary["p"] == "2"
    assert summary["interval"] == "(0,1)"
    assert set(summary) == {"p", "q", "r", "u", "v", "w", "interval"}


@pytest.mark.parametrize(
    ("r", "expected"),
    [(2, TRIVIAL_VERDICT), ("3/2", TRIVIAL_VERDICT), (1, None), ("1/2", None)],
)
def test_triviality_check(r, expected):
    assert triviality_check(_canonical(1, 1, r)) == expected


def test_detect_degenerate_replaces_pp_side():
    e = _problem("ces:2,2:pow:0,pow:0@(0,1)", "ces:1,2:pow:0,pow:0@(0,1)")
    reduced = detect_degenerate(e)
    assert degenerate_sides(e) == ("source",)
    assert reduced is not None
    assert reduced.source.kind == "leb"
    assert reduced.source.p == 2
    assert reduced.source.v(0.75) == pytest.approx(0.5)
    assert reduced.target == e.target


def test_detect_degenerate_both_sides():
    e = _problem("cop:1,1:pow:0,pow:0@(0,1)", "ces:2,2:pow:0,pow:0@(0,1)")
    assert degenerate_sides(e) == ("source", "target")
    assert detect_degenerate(e).kinds == ("leb", "leb")


def test_detect_degenerate_none():
    e = _problem("ces:1,2:pow:0,pow:0@(0,1)", "ces:2,3:pow:0,pow:0@(0,1)")
    assert degenerate_sides(e) == ()
    assert detect_degenerate(e) is None
