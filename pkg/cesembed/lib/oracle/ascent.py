"""Maximização da razão sobre funções-escada não negativas.

Em cada degrau da escada a razão é tabulada para as quebras do degrau e
maximizada por subida multiplicativa em log f, partindo das testemunhas
estruturadas e de valores log-normais aleatórios. A melhor razão final é
recalculada com a avaliação exata.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import pandas as pd

from cesembed.lib.config import NumericsConfig
from cesembed.lib.funcspace import StepFunction
from cesembed.lib.oracle.ladder import derive_ladder, rung_breaks
from cesembed.lib.oracle.models import (
    TRACE_COLUMNS,
    Domain,
    OracleConfig,
    OracleResult,
    growth_diverges,
)
from cesembed.lib.oracle.objective import (
    RatioObjective,
    RatioTable,
    canonical_objective,
    embedding_objective,
)
from cesembed.lib.reduce import CanonicalProblem, EmbeddingProblem
from cesembed.lib.weights import ExtReal, Interval, WeightExpr

logger = logging.getLogger(__name__)

# quebras usadas nos pares (x_i, x_j) das testemunhas
_WITNESS_POINTS = 48
# valor atribuído às células nulas ao passar para log f
_FLOOR = 1e-12
# ganho mínimo em log da razão para continuar a subida
_MIN_GAIN = 1e-12

DensityFn = Callable[[np.ndarray], np.ndarray | None]


@dataclass(frozen=True)
class _Rung:
    domain: Domain
    breaks: np.ndarray
    ratio: ExtReal
    values: np.ndarray


# -----------------------------------------------------------------------------
# Testemunhas
# -----------------------------------------------------------------------------
def _cell_density(v: WeightExpr, r: float, breaks: np.ndarray) -> np.ndarray | None:
    """v^{1/(1−r)} nos pontos médios (extremal de V_r); None para r = 1."""
    if r >= 1:
        return None
    mids = 0.5 * (breaks[:-1] + breaks[1:])
    with np.errstate(all="ignore"):
        dens = np.asarray(v(mids), dtype=float) ** (1.0 / (1.0 - r))
    dens = np.nan_to_num(dens, nan=0.0, posinf=0.0)
    return dens if np.any(dens > 0) else None


def witness_candidates(n: int, density: np.ndarray | None = None) -> np.ndarray:
    """Valores por célula de χ_(x_i, x_j) e, se houver, de density·χ_(x_i, x_j).

    Os pares usam até ``_WITNESS_POINTS`` quebras espalhadas mais todas as
    células isoladas; pares de medida nula não entram.
    """
    idx = np.unique(np.linspace(0, n, min(n + 1, _WITNESS_POINTS)).round().astype(int))
    i, j = np.triu_indices(idx.size, k=1)
    pairs = {(int(idx[a]), int(idx[b])) for a, b in zip(i, j)}
    pairs.update((k, k + 1) for k in range(n))
    ordered = sorted(pairs)
    cells = np.arange(n)
    lo = np.array([p[0] for p in ordered])[:, None]
    hi = np.array([p[1] for p in ordered])[:, None]
    chi = ((cells >= lo) & (cells < hi)).astype(float)
    if density is None:
        return chi
    return np.vstack((chi, chi * density))


# -----------------------------------------------------------------------------
# Subida multiplicativa
# -----------------------------------------------------------------------------
def _log_ratio(table: RatioTable, x: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        return np.log(table.evaluate(np.exp(x)))


def ascend(table: RatioTable, x0: np.ndarray, cfg: OracleConfig) -> tuple[np.ndarray, float]:
    """f_i ← f_i·exp(η ∂log razão/∂log f_i), com derivada por diferenças finitas.

    η é reduzido à metade a cada passo sem ganho; a subida termina quando
    η < ``min_step``, o ganho fica desprezível ou as iterações acabam.
    """
    x = np.asarray(x0, dtype=float).copy()
    value = float(_log_ratio(table, x)[0])
    if not np.isfinite(value):
        return x, value
    eta = cfg.initial_step
    probes = np.eye(x.size) * cfg.fd_step
    grad = None
    for _ in range(cfg.ascent_iters):
        if grad is None:
            shifted = _log_ratio(table, x[None, :] + probes)
            grad = np.nan_to_num((shifted - value) / cfg.fd_step, nan=0.0, posinf=0.0, neginf=0.0)
            if not np.any(grad):
                break
        cand = x + eta * grad
        cand_value = float(_log_ratio(table, cand)[0])
        if cand_value > value:
            gain = cand_value - value
            x, value, grad = cand - cand.max(), cand_value, None
            if not np.isfinite(value) or gain < _MIN_GAIN:
                break
        else:
            eta /= 2.0
            if eta < cfg.min_step:
                break
    return x, value


def _run_rung(
    objective: RatioObjective,
    domain: Domain,
    interval: Interval,
    density_fn: DensityFn | None,
    cfg: OracleConfig,
    rng: np.random.Generator,
    numerics: NumericsConfig | None,
) -> _Rung:
    n = cfg.grid_size
    breaks = rung_breaks(domain, interval, n)
    table = objective.table(breaks, numerics)
    seeds = witness_candidates(n, density_fn(breaks) if density_fn else None)
    ratios = table.evaluate(seeds)
    order = np.argsort(-ratios, kind="stable")
    best_values = seeds[order[0]]
    best = float(ratios[order[0]])

    if math.isfinite(best):
        for restart in range(cfg.restarts):
            if restart == 0:
                x0 = np.log(np.maximum(best_values, _FLOOR))
            else:
                x0 = rng.normal(0.0, 1.0, n)
            x, value = ascend(table, x0, cfg)
            ratio = math.exp(value) if value > -math.inf else 0.0
            if ratio > best:
                best, best_values = ratio, np.exp(x)
            if math.isinf(best):
                break
    logger.debug(
        "estimate_best_constant: domain=(%s, %s) grid=%d ratio=%s", *domain, n, best
    )
    return _Rung(domain, breaks, best, best_values)


def _estimate(
    objective: RatioObjective,
    interval: Interval,
    cfg: OracleConfig,
    numerics: NumericsConfig | None,
    density_fn: DensityFn | None = None,
) -> OracleResult:
    ladder = derive_ladder(interval, cfg)
    streams = np.random.SeedSequence(cfg.seed).spawn(len(ladder))
    rungs = [
        _run_rung(
            objective, domain, interval, density_fn, cfg, np.random.default_rng(stream), numerics
        )
        for domain, stream in zip(ladder, streams)
    ]
    trace = pd.DataFrame(
        [(r.domain[0], r.domain[1], cfg.grid_size, r.ratio) for r in rungs],
        columns=TRACE_COLUMNS,
    )
    top = max(rungs, key=lambda r: r.ratio)
    argmax = StepFunction.from_arrays(top.breaks, top.values / max(top.values.max(), 1e-300))
    best = top.ratio
    if math.isfinite(best) and not argmax.is_zero:
        best = objective.ratio(argmax, numerics)
    diverging = growth_diverges([r.ratio for r in rungs], cfg.growth_factor_infinite)
    logger.debug("estimate_best_constant: best=%s diverging=%s", best, diverging)
    return OracleResult(best_ratio=best, argmax=argmax, trace=trace, diverging=diverging)


# -----------------------------------------------------------------------------
# Operações públicas
# -----------------------------------------------------------------------------
def _canonical_density(c: CanonicalProblem) -> DensityFn | None:
    r = float(c.r)
    if r >= 1:
        return None
    return lambda breaks: _cell_density(c.v, r, breaks)


def witness_lower_bound(
    c: CanonicalProblem,
    cfg: OracleConfig | None = None,
    numerics: NumericsConfig | None = None,
) -> ExtReal:
    """Maior razão entre as testemunhas χ_(x, t) (e v^{1/(1−r)}χ_(x, t) se r < 1).

    Percorre todos os degraus da escada; é sempre uma cota inferior da
    melhor constante.
    """
    cfg = cfg or OracleConfig()
    objective = canonical_objective(c)
    density_fn = _canonical_density(c)
    best = 0.0
    for domain in derive_ladder(c.interval, cfg):
        breaks = rung_breaks(domain, c.interval, cfg.grid_size)
        density = density_fn(breaks) if density_fn else None
        ratios = objective.table(breaks, numerics).evaluate(
            witness_candidates(cfg.grid_size, density)
        )
        best = max(best, float(ratios.max()))
    logger.debug("witness_lower_bound: %s", best)
    return best


def estimate_best_constant(
    c: CanonicalProblem,
    cfg: OracleConfig | None = None,
    numerics: NumericsConfig | None = None,
) -> OracleResult:
    """Melhor constante da desigualdade canônica estimada por maximização da razão."""
    return _estimate(
        canonical_objective(c), c.interval, cfg or OracleConfig(), numerics, _canonical_density(c)
    )


def estimate_original_constant(
    e: EmbeddingProblem,
    cfg: OracleConfig | None = None,
    numerics: NumericsConfig | None = None,
) -> OracleResult:
    """Mesma maximização para ‖f‖_target/‖f‖_source do mergulho original.

    Raises:
        OracleError: algum expoente infinito.
    """
    return _estimate(embedding_objective(e), e.interval, cfg or OracleConfig(), numerics)
