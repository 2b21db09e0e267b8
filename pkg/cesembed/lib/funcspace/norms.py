"""Quase-normas de Lebesgue, Cesàro e Copson em funções-escada.

Com expoentes finitos as normas são avaliadas por :class:`IteratedFunctional`.
Os ramos com ``p`` ou ``q`` infinitos trocam a integral correspondente por um
supremo essencial e são tratados aqui, região por região.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from cesembed.lib.config import NumericsConfig, resolve_numerics
from cesembed.lib.funcspace.exceptions import SpaceSpecError, StepFunctionError
from cesembed.lib.funcspace.iterated import (
    Functional,
    IteratedFunctional,
    LebesgueFunctional,
    partial_integrals,
)
from cesembed.lib.funcspace.models import (
    Exponent,
    SpaceSpec,
    StepFunction,
    is_finite_exponent,
)
from cesembed.lib.numerics import integrate_graded, sup_search
from cesembed.lib.weights import (
    ExtReal,
    Interval,
    Power,
    Scanner,
    Scaled,
    WeightExpr,
    WeightParameterError,
    WeightParseError,
    as_bounds,
    ess_sup,
    ess_sup_many,
    ext_mul,
    ext_pow,
    format_number,
    integrate,
    integrate_many,
    parse_expr,
    register_weight,
    simplify,
    to_float,
)
from cesembed.lib.weights.expr import Order

logger = logging.getLogger(__name__)

TailSide = Literal["up", "lo"]


# -----------------------------------------------------------------------------
# NormTail: t ↦ ‖u‖_{p,(t,b)} ou ‖u‖_{p,(a,t)}
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class NormTail(WeightExpr):
    """Norma da cauda de ``u``: ``(∫_t^b u^p)^{1/p}`` (``up``) ou ``(∫_a^t u^p)^{1/p}`` (``lo``).

    Usado por :func:`pp_weight` quando a primitiva não cabe na família fechada.
    """

    u: WeightExpr
    p: float
    interval: Interval
    side: TailSide = "up"

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        if not (self.p > 0 and math.isfinite(self.p)):
            raise WeightParameterError(f"Expoente da cauda deve ser finito e positivo: {self.p}")
        if self.side not in ("up", "lo"):
            raise WeightParameterError(f"Lado inválido: {self.side!r}")

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        a, b = self.interval.bounds
        if self.side == "up":
            raw = integrate_many(self.u, self.p, t, b)
        else:
            raw = integrate_many(self.u, self.p, a, t)
        return ext_pow(raw, 1.0 / self.p)

    def domain(self) -> tuple[float, float]:
        return self.interval.bounds

    def special_points(self) -> frozenset[float]:
        a, b = self.interval.bounds
        return frozenset(x for x in self.u.special_points() if a < x < b)

    def order_at(self, point: float, side: int = 1) -> Order | None:
        a, b = self.interval.bounds
        if a < point < b and point not in self.special_points():
            return 0.0, 0.0
        return None

    def monotone(self) -> bool:
        return True

    def __str__(self) -> str:
        a, b = self.interval.bounds
        return (
            f"tail:{format_number(self.p)},{format_number(a)},{format_number(b)},"
            f"{self.side};{self.u}"
        )


def _parse_tail(sc: Scanner) -> WeightExpr:
    p = sc.number()
    sc.expect(",")
    a = sc.number()
    sc.expect(",")
    b = sc.number()
    sc.expect(",")
    if sc.accept("up"):
        side: TailSide = "up"
    elif sc.accept("lo"):
        side = "lo"
    else:
        raise WeightParseError("Esperado 'up' ou 'lo'", sc.pos)
    sc.expect(";")
    return NormTail(parse_expr(sc), float(p), Interval(float(a), float(b)), side)


register_weight("tail", _parse_tail)


# -----------------------------------------------------------------------------
# Peso de Lebesgue equivalente (p = q)
# -----------------------------------------------------------------------------
def _closed_tail(u_p: WeightExpr, p: float, kind: str, interval: Interval) -> WeightExpr | None:
    """Primitiva de u^p em forma fechada, elevada a 1/p, quando representável."""
    mono = u_p.monomial()
    if mono is None or mono.beta != 0:
        return None
    a, b = interval.bounds
    c, alpha = mono.coef, mono.alpha
    if kind == "ces":
        if alpha == 0 and math.isfinite(b):
            return Scaled(c ** (1 / p), Power(1 / p, b, reflected=True))
        if mono.reflected and mono.origin == b and alpha > -1:
            return Scaled((c / (alpha + 1)) ** (1 / p), Power((alpha + 1) / p, b, reflected=True))
        if not mono.reflected and math.isinf(b) and alpha < -1:
            return Scaled((c / (-alpha - 1)) ** (1 / p), Power((alpha + 1) / p, mono.origin))
        return None
    if alpha == 0:
        return Scaled(c ** (1 / p), Power(1 / p, a))
    if not mono.reflected and mono.origin == a and alpha > -1:
        return Scaled((c / (alpha + 1)) ** (1 / p), Power((alpha + 1) / p, a))
    return None


def pp_weight(s: SpaceSpec) -> WeightExpr:
    """Peso w com Ces_{p,p}(u, v) = L_p(w) (ou Cop_{p,p}(u, v) = L_p(w)).

    Ces: w(x) = v(x)·‖u‖_{p,(x,b)}; Cop: w(x) = v(x)·‖u‖_{p,(a,x)}.

    Raises:
        WeightParameterError: p != q, expoente infinito ou espaço de Lebesgue.
    """
    if s.kind == "leb":
        raise WeightParameterError("pp_weight exige espaço de Cesàro ou Copson")
    if s.p != s.q:
        raise WeightParameterError(f"pp_weight exige p = q (p={s.p}, q={s.q})")
    if not is_finite_exponent(s.p):
        raise WeightParameterError("pp_weight exige expoente finito")
    p = float(s.p)
    u_p = simplify(s.u**p)
    tail = _closed_tail(u_p, p, s.kind, s.interval)
    if tail is None:
        tail = NormTail(s.u, p, s.interval, "up" if s.kind == "ces" else "lo")
        logger.debug("pp_weight: cauda sem forma fechada, usando %s", tail)
    return simplify(s.v * tail)


# -----------------------------------------------------------------------------
# Normas
# -----------------------------------------------------------------------------
def lebesgue_norm(
    f: StepFunction,
    p: Exponent,
    w: WeightExpr,
    sub: Interval | tuple[float, float] | None = None,
    cfg: NumericsConfig | None = None,
) -> ExtReal:
    """‖f‖_{p,w,sub} = (∫_sub f^p w^p)^{1/p}, ou ess sup f·w para p = inf."""
    lo, hi = f.support if sub is None else as_bounds(sub)
    w.check_contains(lo, hi)
    cells = [(x0, x1, val) for x0, x1, val in f.clipped(lo, hi) if val > 0]
    if not is_finite_exponent(p):
        peaks = [to_float(ext_mul(val, ess_sup(w, (x0, x1), cfg))) for x0, x1, val in cells]
        return max(peaks, default=0.0)
    p = float(p)
    total = math.fsum(
        to_float(ext_mul(val**p, integrate(w, p, (x0, x1), cfg))) for x0, x1, val in cells
    )
    return to_float(ext_pow(total, 1.0 / p))


def functional_for(s: SpaceSpec) -> Functional:
    """Funcional iterado equivalente à quase-norma de ``s`` (expoentes finitos)."""
    if not s.finite_exponents:
        raise SpaceSpecError(f"Funcional exige expoentes finitos: {s}")
    p, q = float(s.p), float(s.q)
    v_p = simplify(s.v**p)
    if s.kind == "leb":
        return LebesgueFunctional(p, v_p, p, s.interval)
    direction = "left" if s.kind == "ces" else "right"
    return IteratedFunctional(p, v_p, q / p, simplify(s.u**q), q, s.interval, direction)


def space_norm(f: StepFunction, s: SpaceSpec, cfg: NumericsConfig | None = None) -> ExtReal:
    """Quase-norma de ``f`` no espaço ``s`` (Definição de Ces/Cop/L_p com pesos).

    Raises:
        StepFunctionError: suporte de ``f`` fora do intervalo de ``s``.
    """
    lo, hi = f.support
    if not s.interval.contains(lo, hi):
        raise StepFunctionError(f"Suporte ({lo}, {hi}) fora de {s.interval}")
    if f.is_zero:
        return 0.0
    if s.kind == "leb":
        return lebesgue_norm(f, s.p, s.v, s.interval, cfg)
    if s.finite_exponents:
        return functional_for(s).evaluate(f, cfg)
    return _norm_with_sup(f, s, resolve_numerics(cfg))


# -----------------------------------------------------------------------------
# Ramos com expoente infinito
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class _InnerProfile:
    """t ↦ ‖f‖_{p,v,(a,t)} (ou (t,b)) célula a célula."""

    spec: SpaceSpec
    lo: np.ndarray
    hi: np.ndarray
    values: np.ndarray
    acc: np.ndarray
    total: float

    @classmethod
    def build(cls, f: StepFunction, spec: SpaceSpec, cfg: NumericsConfig) -> _InnerProfile:
        breaks = np.asarray(f.breaks)
        lo, hi, vals = breaks[:-1], breaks[1:], np.asarray(f.values)
        if is_finite_exponent(spec.p):
            p = float(spec.p)
            piece = ext_mul(ext_pow(vals, p), integrate_many(spec.v, p, lo, hi, cfg))
            if spec.kind == "ces":
                acc = np.concatenate(([0.0], np.cumsum(piece)[:-1]))
            else:
                acc = np.concatenate((np.cumsum(piece[::-1])[:-1][::-1], [0.0]))
            total = float(ext_pow(piece.sum(), 1.0 / p))
        else:
            piece = ext_mul(vals, ess_sup_many(spec.v, lo, hi, cfg))
            if spec.kind == "ces":
                acc = np.concatenate(([0.0], np.maximum.accumulate(piece)[:-1]))
            else:
                acc = np.concatenate((np.maximum.accumulate(piece[::-1])[:-1][::-1], [0.0]))
            total = float(piece.max())
        return cls(spec, lo, hi, vals, acc, total)

    def at(self, t: np.ndarray, rows: np.ndarray, cfg: NumericsConfig) -> np.ndarray:
        lo = self.lo[rows].reshape(rows.shape + (1,) * (t.ndim - rows.ndim))
        hi = self.hi[rows].reshape(lo.shape)
        val = self.values[rows].reshape(lo.shape)
        acc = self.acc[rows].reshape(lo.shape)
        left, right = (lo, t) if self.spec.kind == "ces" else (t, hi)
        if is_finite_exponent(self.spec.p):
            p = float(self.spec.p)
            part = partial_integrals(simplify(self.spec.v**p), left, right, cfg)
            return ext_pow(acc + ext_mul(ext_pow(val, p), part), 1.0 / p)
        part = ess_sup_many(self.spec.v, left, right, cfg)
        return np.maximum(acc, ext_mul(val, part))


def _norm_with_sup(f: StepFunction, s: SpaceSpec, cfg: NumericsConfig) -> ExtReal:
    a, b = s.interval.bounds
    x0, xn = f.support
    profile = _InnerProfile.build(f, s, cfg)
    # região em que a norma interna vale o total
    full = (xn, b) if s.kind == "ces" else (a, x0)
    rows = np.arange(f.n_cells)

    if is_finite_exponent(s.q):
        q = float(s.q)
        u_q = simplify(s.u**q)

        def integrand(t: np.ndarray) -> np.ndarray:
            return ext_mul(ext_pow(profile.at(t, rows, cfg), q), u_q(t))

        cells = integrate_graded(integrand, profile.lo, profile.hi, cfg)
        tail = ext_mul(profile.total**q, integrate(u_q, 1.0, full, cfg))
        value = to_float(ext_pow(np.sum(cells) + tail, 1.0 / q))
    else:

        def weighted(points: np.ndarray, idx: np.ndarray) -> np.ndarray:
            return ext_mul(s.u(points), profile.at(points, idx, cfg))

        peaks = sup_search(weighted, profile.lo, profile.hi, cfg)
        tail = to_float(ext_mul(profile.total, ess_sup(s.u, full, cfg)))
        value = max(float(np.max(peaks)), tail)
    logger.debug("space_norm: %s com supremo -> %s", s.kind, value)
    return value
