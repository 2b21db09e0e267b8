import json
import math

import pytest

from cesembed.lib.constants import REGIME_REGISTRY, ConstantsReport
from cesembed.lib.pipeline import (
    EXIT_FINITE,
    EXIT_INFINITE,
    EXIT_TRIVIAL,
    EmbeddingReport,
    NormReport,
    emit_report,
)


def _report(values, regime="iii", **kw) -> EmbeddingReport:
    theorem = ConstantsReport.from_values(REGIME_REGISTRY[regime], values)
    return EmbeddingReport(
        problem="ces:1,2:pow:0,pow:0@(0,1) -> ces:1,2:pow:0,pow:0@(0,1)",
        canonical={"p": "2", "q": "2", "r": "1", "p1": "1"},
        theorem=theorem,
        finite=theorem.finite,
        **kw,
    )


def test_json_keys_are_stable():
    data = json.loads(emit_report(_report({"C1": 1.0, "C3": 1.0})))
    assert set(data) == {
        "agreement",
        "canonical",
        "constants",
        "estimate",
        "finite",
        "notes",
        "oracle",
        "regime",
    }
    assert data["regime"] == "iii"
    assert data["constants"] == {"C1": 1.0, "C3": 1.0}
    assert data["estimate"] == 2.0
    assert data["oracle"] is None


def test_json_writes_infinity_as_text():
    data = json.loads(emit_report(_report({"C1": 1.0, "C3": math.inf})))
    assert data["constants"]["C3"] == "inf"
    assert data["estimate"] == "inf"
    assert data["finite"] is False


def test_text_names_the_offending_constant():
    text = emit_report(_report({"C1": 1.0, "C3": math.inf}), "text")
    lines = text.splitlines()
    assert "finite: false" in lines
    assert "regime: iii" in lines
    assert "  C1 = 1" in lines
    assert "estimate: inf" in lines
    assert "infinite: C3" in lines


def test_text_finite_report():
    text = emit_report(_report({"C1": 0.5, "C3": 0.25}, notes=("degenerate: x",)), "text")
    lines = text.splitlines()
    assert lines[0].startswith("problem: ces:1,2")
    assert "finite: true" in lines
    assert "canonical: p=2 q=2 r=1 (p1=1)" in lines
    assert "estimate: 0.75" in lines
    assert lines[-2:] == ["notes:", "  - degenerate: x"]


def test_trivial_report():
    rep = EmbeddingReport(problem="x", finite=False, trivial=True, notes=("trivial",))
    assert rep.exit_code == EXIT_TRIVIAL
    assert "verdict: trivial" in emit_report(rep, "text").splitlines()
    assert rep.regime is None
    assert rep.estimate is None


@pytest.mark.parametrize(("finite", "code"), [(True, EXIT_FINITE), (False, EXIT_INFINITE)])
def test_exit_codes(finite, code):
    assert EmbeddingReport(problem="x", finite=finite).exit_code == code


def test_norm_report():
    rep = NormReport(space="leb:1:pow:0@(0,1)", norm=math.inf)
    assert rep.exit_code == EXIT_INFINITE
    assert json.loads(emit_report(rep)) == {
        "space": "leb:1:pow:0@(0,1)",
        "norm": "inf",
        "finite": False,
    }
    assert emit_report(rep, "text").splitlines() == [
        "space: leb:1:pow:0@(0,1)",
        "norm: inf",
        "finite: false",
    ]
