"""Redução de Ces ↪ Ces à desigualdade canônica, casos degenerados e triviais."""

from __future__ import annotations

import logging

from cesembed.lib.funcspace import Exponent, SpaceSpec, is_finite_exponent, pp_weight
from cesembed.lib.reduce.exceptions import UnsupportedProblemError
from cesembed.lib.reduce.models import CanonicalProblem, EmbeddingProblem
from cesembed.lib.weights import simplify

logger = logging.getLogger(__name__)

TRIVIAL_VERDICT = "trivial: inequality holds only for f = 0 a.e. (r > 1)"


def canonicalize(e: EmbeddingProblem) -> tuple[CanonicalProblem, Exponent]:
    """Ces_{p1,q1}(u1, v1) ↪ Ces_{p2,q2}(u2, v2) na forma canônica.

    r = p2/p1, q = q2/p1, p = q1/p1; u = u2^{q2}, v = v1^{-p2}·v2^{p2},
    w = u1^{q1}. Devolve também p1: as constantes ótimas satisfazem c^{p1} = C.

    Raises:
        UnsupportedProblemError: lados que não são Cesàro ou expoente infinito.
        HypothesisViolationError: 0 < ∫_x^b w < inf falha.
    """
    if e.kinds != ("ces", "ces"):
        raise UnsupportedProblemError(f"canonicalize exige Ces ↪ Ces, recebido {e.kinds}")
    src, tgt = e.source, e.target
    if not (src.finite_exponents and tgt.finite_exponents):
        raise UnsupportedProblemError("canonicalize exige expoentes finitos")
    p1, q1, p2, q2 = src.p, src.q, tgt.p, tgt.q
    problem = CanonicalProblem(
        p=q1 / p1,
        q=q2 / p1,
        r=p2 / p1,
        u=simplify(tgt.u ** float(q2)),
        v=simplify(src.v ** float(-p2) * tgt.v ** float(p2)),
        w=simplify(src.u ** float(q1)),
        interval=e.interval,
    )
    logger.debug("canonicalize: %s => p=%s q=%s r=%s", e, problem.p, problem.q, problem.r)
    return problem, p1


def _pp_side(spec: SpaceSpec) -> SpaceSpec | None:
    if spec.kind == "leb" or spec.p != spec.q or not is_finite_exponent(spec.p):
        return None
    return SpaceSpec.lebesgue(spec.p, pp_weight(spec), spec.interval)


def degenerate_sides(e: EmbeddingProblem) -> tuple[str, ...]:
    """Lados (``"source"``/``"target"``) com p = q, que coincidem com um L_p."""
    sides = []
    if _pp_side(e.source) is not None:
        sides.append("source")
    if _pp_side(e.target) is not None:
        sides.append("target")
    return tuple(sides)


def detect_degenerate(e: EmbeddingProblem) -> EmbeddingProblem | None:
    """Troca os lados Ces_{p,p}/Cop_{p,p} pelo L_p equivalente; None se nenhum se aplica."""
    source = _pp_side(e.source)
    target = _pp_side(e.target)
    if source is None and target is None:
        return None
    reduced = e.with_sides(source=source, target=target)
    logger.debug("detect_degenerate: %s => %s", e, reduced)
    return reduced


def triviality_check(c: CanonicalProblem) -> str | None:
    """Com r > 1 a desigualdade só vale para f = 0 q.t.p."""
    if c.r > 1:
        return TRIVIAL_VERDICT
    return None
