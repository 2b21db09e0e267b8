"""Busca de supremos: grade log-uniforme seguida de seção áurea.

A busca trabalha numa coordenada ``s`` em que as extremidades ficam a
distâncias geometricamente pequenas: para (lo, hi) finito usa-se
``t = lo + (hi − lo)·expit(s)``; para ``hi = +inf``, ``t = lo + scale·exp(s)``.
Todas as funções recebem pontos com formato ``(linhas, k)`` e devolvem
valores do mesmo formato, de modo que muitos supremos independentes
(um por linha) são resolvidos numa única chamada.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np
from scipy.special import expit

from cesembed.lib.config import NumericsConfig, resolve_numerics
from cesembed.lib.numerics.quadrature import EndSide

logger = logging.getLogger(__name__)

RowFn = Callable[[np.ndarray, np.ndarray], np.ndarray]

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0
_DEFAULT_BUDGET = 1 << 16

# distâncias 10^-k (ou 10^k com hi infinito) do teste de crescimento
_GROWTH_DECADES = np.arange(6, 13)
# crescimento mínimo a cada três décadas para declarar o supremo infinito
_SUP_GROWTH = 1.4


def _span(depth: float) -> float:
    return float(np.log((1.0 - depth) / depth))


def to_points(s: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    infinite = np.isinf(hi)
    scale = np.maximum(1.0, np.abs(lo))
    with np.errstate(all="ignore"):
        finite_pts = lo + np.where(infinite, 0.0, hi - lo) * expit(s)
        inf_pts = lo + scale * np.exp(s)
    return np.where(infinite, inf_pts, finite_pts)


def log_grid(
    lo: float, hi: float, n: int, cfg: NumericsConfig | None = None
) -> np.ndarray:
    """Grade log-uniforme de ``n`` pontos estritamente dentro de (lo, hi)."""
    cfg = resolve_numerics(cfg)
    span = _span(cfg.quad_depth)
    s = np.linspace(-span, span, n)
    return to_points(s, np.asarray(lo, dtype=float), np.asarray(hi, dtype=float))


def _clean(vals: np.ndarray) -> np.ndarray:
    return np.where(np.isnan(vals), -np.inf, vals)


def _evaluate(
    fn: RowFn, s: np.ndarray, lo: np.ndarray, hi: np.ndarray, rows: np.ndarray
) -> np.ndarray:
    with np.errstate(all="ignore"):
        vals = fn(to_points(s, lo[:, None], hi[:, None]), rows)
    return _clean(np.asarray(vals, dtype=float))


def _search_rows(
    fn: RowFn,
    lo: np.ndarray,
    hi: np.ndarray,
    rows: np.ndarray,
    n: int,
    cfg: NumericsConfig,
) -> np.ndarray:
    span = _span(cfg.quad_depth)
    s_grid = np.linspace(-span, span, n)
    vals = _evaluate(fn, np.broadcast_to(s_grid, (lo.size, n)), lo, hi, rows)
    best = vals.max(axis=1)
    if np.all(np.isposinf(best)):
        return best

    k = min(cfg.sup_top_k, n)
    top = np.argsort(-vals, axis=1, kind="stable")[:, :k]
    a = s_grid[np.maximum(top - 1, 0)]
    b = s_grid[np.minimum(top + 1, n - 1)]
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = _evaluate(fn, c, lo, hi, rows)
    fd = _evaluate(fn, d, lo, hi, rows)
    best = np.maximum(best, np.maximum(fc.max(axis=1), fd.max(axis=1)))

    for _ in range(cfg.golden_max_iter):
        prev = best.copy()
        left_wins = fc > fd
        b = np.where(left_wins, d, b)
        a = np.where(left_wins, a, c)
        new_c = b - _INV_PHI * (b - a)
        new_d = a + _INV_PHI * (b - a)
        probe = np.where(left_wins, new_c, new_d)
        fp = _evaluate(fn, probe, lo, hi, rows)
        old_c, old_fc, old_d, old_fd = c, fc, d, fd
        c = np.where(left_wins, new_c, old_d)
        fc = np.where(left_wins, fp, old_fd)
        d = np.where(left_wins, old_c, new_d)
        fd = np.where(left_wins, old_fc, fp)
        best = np.maximum(best, fp.max(axis=1))
        finite = np.isfinite(best) & np.isfinite(prev)
        change = np.where(
            finite, np.abs(best - prev) / np.maximum(np.abs(best), 1e-300), 0.0
        )
        width = np.max(b - a)
        if width < 1e-9 or (np.max(change) < cfg.tau_sup and width < 1e-4):
            break
    return best


def _endpoint_growth(
    fn: RowFn,
    lo: np.ndarray,
    hi: np.ndarray,
    rows: np.ndarray,
    sides: bool | EndSide,
) -> np.ndarray:
    """Linhas cujos valores crescem sem parar em direção a uma extremidade.

    Avalia ``fn`` a distâncias 10^-6 ... 10^-12 de cada ponta (10^6 ... 10^12
    com hi infinito) e exige crescimento monótono de pelo menos
    ``_SUP_GROWTH`` a cada três décadas.
    """
    steps = _GROWTH_DECADES * np.log(10.0)
    flagged = np.zeros(lo.size, dtype=bool)
    chosen = [s for side, s in (("lo", -steps), ("hi", steps)) if sides in (True, side)]
    for s in chosen:
        vals = _evaluate(fn, np.broadcast_to(s, (lo.size, s.size)), lo, hi, rows)
        with np.errstate(all="ignore"):
            monotone = np.all(np.diff(vals, axis=1) >= 0, axis=1) & (vals[:, 0] > 0)
            first = vals[:, 3] / vals[:, 0]
            second = vals[:, 6] / vals[:, 3]
        flagged |= (
            monotone
            & np.isfinite(vals[:, -1])
            & (first >= _SUP_GROWTH)
            & (second >= _SUP_GROWTH)
        )
    return flagged


def sup_search(
    fn: RowFn,
    lo: np.ndarray | float,
    hi: np.ndarray | float,
    cfg: NumericsConfig | None = None,
    *,
    grid: int | None = None,
    budget: int = _DEFAULT_BUDGET,
    detect_divergence: bool | EndSide = False,
) -> np.ndarray:
    """Supremo de ``fn`` em cada (lo[i], hi[i]).

    Avalia uma grade log-uniforme (``sup_grid`` pontos por padrão) e refina
    as ``sup_top_k`` melhores amostras de cada linha por seção áurea. Linhas
    vazias (hi <= lo) valem 0. ``budget`` limita o número de pontos por
    chamada de ``fn`` na fase de grade. Com ``detect_divergence`` as linhas
    que crescem sem limite numa extremidade (ou só em ``"lo"``/``"hi"``)
    valem +inf.
    """
    cfg = resolve_numerics(cfg)
    n = int(grid or cfg.sup_grid)
    lo_a, hi_a = np.broadcast_arrays(
        np.atleast_1d(np.asarray(lo, dtype=float)),
        np.atleast_1d(np.asarray(hi, dtype=float)),
    )
    shape = lo_a.shape
    lo_f, hi_f = lo_a.ravel(), hi_a.ravel()
    out = np.zeros(lo_f.size)
    live = np.flatnonzero(hi_f > lo_f)
    rows = max(1, budget // n)
    for start in range(0, live.size, rows):
        idx = live[start : start + rows]
        out[idx] = _search_rows(fn, lo_f[idx], hi_f[idx], idx, n, cfg)
        if detect_divergence:
            grows = _endpoint_growth(fn, lo_f[idx], hi_f[idx], idx, detect_divergence)
            if np.any(grows):
                logger.debug("sup_search: %d linha(s) divergentes", int(grows.sum()))
            out[idx] = np.where(grows, np.inf, out[idx])
    out = np.maximum(out, 0.0)
    return out.reshape(shape)
