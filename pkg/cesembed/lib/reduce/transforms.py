"""Mudanças de variável que trocam Copson por Cesàro e a reescrita de multiplicadores.

Para b finito usa-se a reflexão t ↦ a + b − t. Para b = inf usa-se a
inversão t ↦ a + 1/(t − a), com fatores jacobianos (t − a)^{-2/q_i} no peso
externo e (t − a)^{-2/p_i} no interno de cada lado, de modo que as
quase-normas são preservadas. Os pesos são reescritos dentro da família
fechada; quando isso não é possível levanta-se :class:`UnsupportedWeightError`.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction

from cesembed.lib.funcspace import NormTail, SpaceSpec, is_finite_exponent
from cesembed.lib.reduce.models import EmbeddingProblem
from cesembed.lib.weights import (
    Interval,
    Piecewise,
    Power,
    PowerLog,
    PowerOf,
    Product,
    Scaled,
    UnsupportedWeightError,
    WeightExpr,
    is_unit,
    simplify,
)

logger = logging.getLogger(__name__)

_FLIPPED = {"ces": "cop", "cop": "ces", "leb": "leb"}


def _clip(w: Piecewise, lo: float, hi: float) -> list[tuple[float, float, WeightExpr]]:
    pieces = []
    for x0, x1, piece in w.pieces:
        c0, c1 = max(x0, lo), min(x1, hi)
        if c0 < c1:
            pieces.append((c0, c1, piece))
    return pieces


# -----------------------------------------------------------------------------
# Reflexão t ↦ a + b − t
# -----------------------------------------------------------------------------
def _mirror(x: float, a: float, b: float) -> float:
    return float(Fraction(a) + Fraction(b) - Fraction(x))


def reflect_weight(w: WeightExpr, interval: Interval) -> WeightExpr:
    """w(a + b − t) para (a, b) limitado.

    Raises:
        UnsupportedWeightError: peso sem reflexão na família fechada (ex.: PowerLog).
    """
    a, b = interval.bounds
    if not interval.bounded:
        raise UnsupportedWeightError("Reflexão exige intervalo limitado")
    match w:
        case Power(alpha=alpha, origin=origin, reflected=reflected):
            if alpha == 0:
                return w
            return Power(alpha, _mirror(origin, a, b), not reflected)
        case PowerLog(alpha=alpha, beta=beta) if beta == 0:
            return reflect_weight(Power(alpha), interval)
        case Scaled(c=c, inner=inner):
            return Scaled(c, reflect_weight(inner, interval))
        case PowerOf(inner=inner, e=e):
            return PowerOf(reflect_weight(inner, interval), e)
        case Product(left=left, right=right):
            return Product(reflect_weight(left, interval), reflect_weight(right, interval))
        case Piecewise():
            pieces = [
                (_mirror(x1, a, b), _mirror(x0, a, b), reflect_weight(piece, interval))
                for x0, x1, piece in reversed(_clip(w, a, b))
            ]
            return Piecewise(tuple(pieces))
        case NormTail(u=u, p=p, interval=tail_interval, side=side):
            return NormTail(
                reflect_weight(u, tail_interval), p, tail_interval, "lo" if side == "up" else "up"
            )
    raise UnsupportedWeightError(f"Reflexão de {w} sai da família fechada")


# -----------------------------------------------------------------------------
# Inversão t ↦ a + 1/(t − a)
# -----------------------------------------------------------------------------
def _invert_point(x: float, a: float) -> float:
    if x == a:
        return math.inf
    if math.isinf(x):
        return a
    return a + 1.0 / (x - a)


def _jacobian(exponent: float, a: float) -> WeightExpr:
    return Power(exponent, a)


def invert_weight(w: WeightExpr, a: float) -> WeightExpr:
    """w(a + 1/(t − a)) em (a, inf), sem fator jacobiano.

    Raises:
        UnsupportedWeightError: potência com origem diferente de a, PowerLog, etc.
    """
    match w:
        case Power(alpha=alpha) if alpha == 0:
            return w
        case Power(alpha=alpha, origin=origin, reflected=False) if origin == a:
            return Power(-alpha, a)
        case PowerLog(alpha=alpha, beta=beta) if beta == 0:
            return invert_weight(Power(alpha), a)
        case Scaled(c=c, inner=inner):
            return Scaled(c, invert_weight(inner, a))
        case PowerOf(inner=inner, e=e):
            return PowerOf(invert_weight(inner, a), e)
        case Product(left=left, right=right):
            return Product(invert_weight(left, a), invert_weight(right, a))
        case Piecewise():
            pieces = [
                (_invert_point(x1, a), _invert_point(x0, a), invert_weight(piece, a))
                for x0, x1, piece in reversed(_clip(w, a, math.inf))
            ]
            return Piecewise(tuple(pieces))
        case NormTail(u=u, p=p, interval=tail_interval, side=side):
            moved = simplify(_jacobian(-2.0 / p, a) * invert_weight(u, a))
            return NormTail(moved, p, tail_interval, "lo" if side == "up" else "up")
    raise UnsupportedWeightError(f"Inversão de {w} em torno de {a} sai da família fechada")


# -----------------------------------------------------------------------------
# tilde_transform
# -----------------------------------------------------------------------------
def _jacobian_exponent(exponent) -> float:
    return -2.0 / float(exponent) if is_finite_exponent(exponent) else 0.0


def transform_side(spec: SpaceSpec) -> SpaceSpec:
    """Um lado do mergulho após a mudança de variável (Ces ↔ Cop, L_p fica L_p)."""
    interval = spec.interval
    a = interval.a
    if interval.bounded:
        u = reflect_weight(spec.u, interval)
        v = reflect_weight(spec.v, interval)
    else:
        u = _jacobian(_jacobian_exponent(spec.q), a) * invert_weight(spec.u, a)
        v = _jacobian(_jacobian_exponent(spec.p), a) * invert_weight(spec.v, a)
    u, v = simplify(u), simplify(v)
    if spec.kind == "leb":
        return SpaceSpec.lebesgue(spec.p, v, interval, validate=spec.validate)
    return SpaceSpec(_FLIPPED[spec.kind], spec.p, spec.q, u, v, interval, validate=spec.validate)


def tilde_transform(e: EmbeddingProblem) -> EmbeddingProblem:
    """Reescreve Cop ↪ Cop como Ces ↪ Ces e Ces ↪ Cop como Cop ↪ Ces.

    Com b finito a transformação é uma involução.
    """
    out = EmbeddingProblem(transform_side(e.source), transform_side(e.target))
    logger.debug("tilde_transform: %s => %s", e, out)
    return out


# -----------------------------------------------------------------------------
# Multiplicadores
# -----------------------------------------------------------------------------
def multiplier_to_embedding(base: EmbeddingProblem, g: WeightExpr) -> EmbeddingProblem:
    """X ↪ Y_g com ‖h‖_{Y_g} = ‖g·h‖_Y: multiplica o peso interno do alvo por g.

    A norma do multiplicador g de X em Y é a constante ótima do mergulho devolvido.
    """
    if is_unit(g):
        return base
    target = base.target
    return base.with_sides(target=target.with_weights(v=simplify(target.v * g)))
