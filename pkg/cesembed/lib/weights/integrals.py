"""Integrais definidas, supremos essenciais e o funcional V_r.

Convergência é decidida analiticamente pela ordem local do peso nas
extremidades sempre que ela é conhecida; caso contrário aplica-se o teste de
crescimento por truncamento (fator ``divergence_growth`` a cada extensão ×10).
"""

from __future__ import annotations

import logging
import math
import warnings

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from cesembed.lib.config import NumericsConfig, resolve_numerics
from cesembed.lib.numerics import integrate_graded, sup_search
from cesembed.lib.weights.exceptions import WeightParameterError
from cesembed.lib.weights.expr import Piecewise, WeightExpr, integrable_near
from cesembed.lib.weights.extreal import ExtReal, ext_pow, to_float
from cesembed.lib.weights.models import Bounds, Interval, as_bounds

logger = logging.getLogger(__name__)

# pontos de truncamento usados no teste de crescimento
_TRUNCATION_STEPS = 3
# intervalos por chamada da regra graduada
_SMOOTH_CHUNK = 4096


# -----------------------------------------------------------------------------
# Integrais
# -----------------------------------------------------------------------------
def _segments(w: WeightExpr, lo: float, hi: float) -> list[Bounds]:
    cuts = sorted(p for p in w.special_points() if lo < p < hi)
    edges = [lo, *cuts, hi]
    return list(zip(edges[:-1], edges[1:]))


def _endpoint_verdict(w: WeightExpr, e: float, lo: float, hi: float) -> bool | None:
    """True/False quando a ordem local decide a convergência; None se indecidível."""
    left = integrable_near(w.order_at(lo, +1), e, at_infinity=False)
    right = integrable_near(w.order_at(hi, -1), e, at_infinity=math.isinf(hi))
    if left is False or right is False:
        return False
    if left is None or right is None:
        return None
    return True


def _quad(fn, lo: float, hi: float, cfg: NumericsConfig) -> float:
    def integrand(t: float) -> float:
        return float(fn(np.asarray(t)))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        # com hi = inf o quad faz o próprio mapeamento para (0, 1]
        value, _ = quad(integrand, lo, hi, epsabs=0.0, epsrel=cfg.tau_int, limit=200)
    return float(value)


def _truncation_diverges(fn, lo: float, hi: float, cfg: NumericsConfig) -> bool:
    """Teste de crescimento: valores truncados crescendo ×growth a cada extensão ×10."""
    mid = lo + 1.0 if math.isinf(hi) else 0.5 * (lo + hi)
    values = []
    for k in range(_TRUNCATION_STEPS):
        if math.isinf(hi):
            right = lo + 10.0 ** (k + 2) * max(1.0, abs(lo))
        else:
            right = hi - (hi - mid) * 10.0 ** -(k + 4)
        left = lo + (mid - lo) * 10.0 ** -(k + 4)
        values.append(_quad(fn, left, right, cfg))
    growth = cfg.divergence_growth
    return all(
        b >= growth * a and a > 0 for a, b in zip(values[:-1], values[1:])
    )


def _integrate_segment(
    w: WeightExpr, e: float, lo: float, hi: float, cfg: NumericsConfig
) -> ExtReal:
    mono = w.monomial()
    if mono is not None and mono.beta == 0:
        return to_float(mono.integral(e, np.asarray(lo), np.asarray(hi)))

    def fn(t: np.ndarray) -> np.ndarray:
        return ext_pow(w(t), e)

    verdict = _endpoint_verdict(w, e, lo, hi)
    if verdict is False:
        logger.debug("integrate: divergência analítica de %s^%s em (%s, %s)", w, e, lo, hi)
        return math.inf
    if verdict is None and _truncation_diverges(fn, lo, hi, cfg):
        logger.debug("integrate: divergência por truncamento de %s em (%s, %s)", w, lo, hi)
        return math.inf
    return _quad(fn, lo, hi, cfg)


def integrate(
    w: WeightExpr,
    e: float,
    sub: Interval | Bounds,
    cfg: NumericsConfig | None = None,
) -> ExtReal:
    """∫_sub w(t)^e dt, exata para potências e por quadratura adaptativa no resto.

    Retorna ``+inf`` em divergência; subintervalo vazio vale 0.

    Raises:
        WeightDomainError: se ``sub`` sai do domínio de ``w``.
    """
    cfg = resolve_numerics(cfg)
    lo, hi = as_bounds(sub)
    if hi <= lo:
        return 0.0
    w.check_contains(lo, hi)
    if isinstance(w, Piecewise):
        total = 0.0
        for x0, x1, piece in w.pieces:
            a, b = max(lo, x0), min(hi, x1)
            if a < b:
                total += integrate(piece, e, (a, b), cfg)
        return total
    return math.fsum(
        _integrate_segment(w, e, a, b, cfg) for a, b in _segments(w, lo, hi)
    )


def _special_divergence(
    w: WeightExpr, e: float, lo: np.ndarray, hi: np.ndarray
) -> np.ndarray:
    diverging = np.zeros(lo.shape, dtype=bool)
    for point in (*w.special_points(), math.inf):
        for bound, side in ((lo, +1), (hi, -1)):
            hits = bound == point
            if not np.any(hits):
                continue
            ok = integrable_near(w.order_at(point, side), e, math.isinf(point))
            if ok is False:
                diverging |= hits & (hi > lo)
    return diverging


def integrate_many(
    w: WeightExpr,
    e: float,
    lo: np.ndarray | float,
    hi: np.ndarray | float,
    cfg: NumericsConfig | None = None,
) -> np.ndarray:
    """Versão vetorizada de :func:`integrate` (sem checagem de domínio)."""
    lo_a, hi_a = np.broadcast_arrays(
        np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)
    )
    if isinstance(w, Piecewise):
        total = np.zeros(lo_a.shape)
        for x0, x1, piece in w.pieces:
            a = np.clip(lo_a, x0, x1)
            b = np.clip(hi_a, x0, x1)
            total = total + np.where(b > a, integrate_many(piece, e, a, b, cfg), 0.0)
        return np.where(hi_a > lo_a, total, 0.0)
    mono = w.monomial()
    if mono is not None and mono.beta == 0:
        return mono.integral(e, lo_a, hi_a)
    cuts = sorted(w.special_points())
    if cuts:
        edges = [-math.inf, *cuts, math.inf]
        total = np.zeros(lo_a.shape)
        for left, right in zip(edges[:-1], edges[1:]):
            a = np.clip(lo_a, left, right)
            b = np.clip(hi_a, left, right)
            total = total + np.where(b > a, _integrate_smooth(w, e, a, b, cfg), 0.0)
        return total
    return _integrate_smooth(w, e, lo_a, hi_a, cfg)


def _integrate_smooth(
    w: WeightExpr, e: float, lo: np.ndarray, hi: np.ndarray, cfg: NumericsConfig | None
) -> np.ndarray:
    known = w.order_at(math.inf, -1) is not None

    def fn(t: np.ndarray) -> np.ndarray:
        return ext_pow(w(t), e)

    live = hi > lo
    safe_lo = np.where(live, lo, 0.0).ravel()
    safe_hi = np.where(live, hi, 1.0).ravel()
    flat = np.empty(safe_lo.size)
    for start in range(0, flat.size, _SMOOTH_CHUNK):
        sl = slice(start, start + _SMOOTH_CHUNK)
        flat[sl] = integrate_graded(
            fn, safe_lo[sl], safe_hi[sl], cfg, detect_divergence=not known
        )
    out = np.where(_special_divergence(w, e, lo, hi), np.inf, flat.reshape(lo.shape))
    return np.where(live, out, 0.0)


# -----------------------------------------------------------------------------
# Supremos essenciais
# -----------------------------------------------------------------------------
def _numeric_sup(
    w: WeightExpr, lo: np.ndarray, hi: np.ndarray, cfg: NumericsConfig
) -> np.ndarray:
    def fn(points: np.ndarray, rows: np.ndarray) -> np.ndarray:
        return np.asarray(w(points), dtype=float)

    interior = sup_search(fn, lo, hi, cfg)
    ends = np.maximum(w.limit(lo, +1), w.limit(hi, -1))
    return np.maximum(interior, np.nan_to_num(ends, nan=0.0))


def ess_sup_many(
    w: WeightExpr,
    lo: np.ndarray | float,
    hi: np.ndarray | float,
    cfg: NumericsConfig | None = None,
) -> np.ndarray:
    """Versão vetorizada de :func:`ess_sup`; intervalos vazios valem 0."""
    cfg = resolve_numerics(cfg)
    lo_a, hi_a = np.broadcast_arrays(
        np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)
    )
    live = hi_a > lo_a
    if isinstance(w, Piecewise):
        out = np.zeros(lo_a.shape)
        for x0, x1, piece in w.pieces:
            a = np.clip(lo_a, x0, x1)
            b = np.clip(hi_a, x0, x1)
            out = np.maximum(out, np.where(b > a, ess_sup_many(piece, a, b, cfg), 0.0))
        return np.where(live, out, 0.0)
    if w.monotone():
        ends = np.maximum(w.limit(lo_a, +1), w.limit(hi_a, -1))
        return np.where(live, ends, 0.0)
    out = np.zeros(lo_a.shape)
    if np.any(live):
        out[live] = _numeric_sup(w, lo_a[live], hi_a[live], cfg)
    return out


def ess_sup(
    w: WeightExpr, sub: Interval | Bounds, cfg: NumericsConfig | None = None
) -> ExtReal:
    """ess sup de ``w`` em ``sub``; exato para peças monótonas, 0 no vazio."""
    lo, hi = as_bounds(sub)
    if hi <= lo:
        return 0.0
    w.check_contains(lo, hi)
    return to_float(ess_sup_many(w, np.asarray(lo), np.asarray(hi), cfg))


# -----------------------------------------------------------------------------
# V_r
# -----------------------------------------------------------------------------
def _check_r(r: float) -> None:
    if not (0 < r <= 1):
        raise WeightParameterError(f"r deve estar em (0, 1]: {r}")


def V_r_many(
    v: WeightExpr,
    r: float,
    x: np.ndarray | float,
    t: np.ndarray | float,
    cfg: NumericsConfig | None = None,
) -> np.ndarray:
    """V_r(x, t) vetorizado: (∫_x^t v^{1/(1−r)})^{(1−r)/r} ou ess sup v (r = 1)."""
    _check_r(r)
    if r == 1:
        return ess_sup_many(v, x, t, cfg)
    raw = integrate_many(v, 1.0 / (1.0 - r), x, t, cfg)
    return ext_pow(raw, (1.0 - r) / r)


def V_r(
    v: WeightExpr,
    r: float,
    x: float,
    t: float,
    cfg: NumericsConfig | None = None,
) -> ExtReal:
    _check_r(r)
    if t <= x:
        return 0.0
    if r == 1:
        return ess_sup(v, (x, t), cfg)
    raw = integrate(v, 1.0 / (1.0 - r), (x, t), cfg)
    return to_float(ext_pow(raw, (1.0 - r) / r))
