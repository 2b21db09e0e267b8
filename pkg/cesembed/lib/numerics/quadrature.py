"""Regra de Gauss–Legendre graduada.

:class:`GradedRule` é uma regra composta fixa em (0, 1), com células em
progressão geométrica rumo às duas extremidades. É vetorizada sobre qualquer
formato de limites e é a base das integrais aninhadas das constantes.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Literal

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import expit

from cesembed.lib.config import NumericsConfig, resolve_numerics

logger = logging.getLogger(__name__)

ArrayFn = Callable[[np.ndarray], np.ndarray]
# extremidade testada pelos detectores de divergência; True testa as duas
EndSide = Literal["lo", "hi"]

# células consecutivas cujas contribuições não decaem rumo à extremidade
_DECAY_SLACK = 1e-3


@lru_cache(maxsize=16)
def unit_gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nós e pesos de Gauss–Legendre transportados para [0, 1]."""
    x, w = leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def _graded_breaks(cells: int, depth: float) -> np.ndarray:
    span = np.log((1.0 - depth) / depth)
    inner = expit(np.linspace(-span, span, cells - 1))
    return np.concatenate(([0.0], inner, [1.0]))


@dataclass(frozen=True)
class GradedRule:
    """Regra composta em (0, 1) com células geométricas nas extremidades.

    Cada célula recebe ``order`` nós de Gauss–Legendre; com ``bisect`` cada
    célula é dividida ao meio uma vez (passo único de refinamento).
    """

    cells: int
    order: int
    depth: float
    bisect: bool = True
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        breaks = _graded_breaks(self.cells, self.depth)
        if self.bisect:
            mids = 0.5 * (breaks[:-1] + breaks[1:])
            breaks = np.sort(np.concatenate((breaks, mids)))
        x, w = unit_gauss_legendre(self.order)
        widths = np.diff(breaks)
        nodes = breaks[:-1, None] + widths[:, None] * x[None, :]
        weights = widths[:, None] * w[None, :]
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_config(
        cls, cfg: NumericsConfig | None = None, *, bisect: bool = True
    ) -> GradedRule:
        cfg = resolve_numerics(cfg)
        return _cached_rule(cfg.quad_cells, cfg.gl_order, cfg.quad_depth, bisect)

    @property
    def n_cells(self) -> int:
        return int(self.nodes.shape[0])

    def map_nodes(
        self, lo: np.ndarray, hi: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        """Transporta os nós para (lo, hi); ``hi`` infinito usa t = lo + y/(1−y).

        Retorna ``(t, jac)`` com formato ``lo.shape + (n_cells, order)``.
        """
        y = self.nodes
        lo_e = lo[..., None, None]
        hi_e = hi[..., None, None]
        infinite = np.isinf(hi_e)
        width = np.where(infinite, 0.0, hi_e - lo_e)
        t_fin = lo_e + width * y
        t_inf = lo_e + y / (1.0 - y)
        t = np.where(infinite, t_inf, t_fin)
        jac = np.where(infinite, 1.0 / (1.0 - y) ** 2, width)
        return t, jac


@lru_cache(maxsize=8)
def _cached_rule(cells: int, order: int, depth: float, bisect: bool) -> GradedRule:
    return GradedRule(cells, order, depth, bisect)


def _endpoint_divergent(contrib: np.ndarray, total: np.ndarray, side: int) -> np.ndarray:
    """Contribuições por célula que não decaem rumo à extremidade indicam divergência."""
    if side < 0:
        c1, c2, c3 = contrib[..., 1], contrib[..., 2], contrib[..., 3]
    else:
        c1, c2, c3 = contrib[..., -2], contrib[..., -3], contrib[..., -4]
    keep = 1.0 - _DECAY_SLACK
    return (
        (c1 > 0)
        & (c2 > 0)
        & (c1 >= keep * c2)
        & (c2 >= keep * c3)
        & (c1 > 1e-12 * total)
    )


def integrate_graded(
    fn: ArrayFn,
    lo: np.ndarray | float,
    hi: np.ndarray | float,
    cfg: NumericsConfig | None = None,
    *,
    bisect: bool = True,
    detect_divergence: bool | EndSide = True,
) -> np.ndarray:
    """Integra `fn` em (lo, hi) elemento a elemento, vetorizado.

    ``fn`` recebe nós com formato ``shape + (n_cells, order)`` (onde ``shape``
    é o formato comum de ``lo``/``hi``) e devolve valores do mesmo formato.
    Valores ``+inf`` em qualquer nó tornam o resultado infinito; com
    ``detect_divergence`` as extremidades (ou só ``"lo"``/``"hi"``) são
    testadas pelo decaimento das contribuições das células graduadas.
    """
    rule = GradedRule.from_config(cfg, bisect=bisect)
    lo_a, hi_a = np.broadcast_arrays(
        np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)
    )
    empty = ~(hi_a > lo_a)
    safe_hi = np.where(empty, lo_a + 1.0, hi_a)
    t, jac = rule.map_nodes(lo_a, safe_hi)
    with np.errstate(all="ignore"):
        vals = np.asarray(fn(t), dtype=float)
        vals = np.broadcast_to(vals, t.shape)
        has_inf = np.any(np.isposinf(vals), axis=(-2, -1))
        contrib = np.sum(
            np.nan_to_num(vals, nan=0.0, posinf=0.0) * jac * rule.weights, axis=-1
        )
        total = contrib.sum(axis=-1)
        if rule.bisect:
            contrib = contrib.reshape(*contrib.shape[:-1], -1, 2).sum(axis=-1)
    out = np.where(has_inf, np.inf, total)
    if detect_divergence:
        diverging = np.zeros(total.shape, dtype=bool)
        if detect_divergence in (True, "lo"):
            diverging |= _endpoint_divergent(contrib, total, -1)
        if detect_divergence in (True, "hi"):
            diverging |= _endpoint_divergent(contrib, total, +1)
        if np.any(diverging & ~has_inf):
            logger.debug(
                "integrate_graded: %d integral(is) divergente(s) pelas extremidades",
                int(np.count_nonzero(diverging & ~has_inf)),
            )
        out = np.where(diverging, np.inf, out)
    out = np.where(empty, 0.0, out)
    return out
