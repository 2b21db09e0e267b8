"""Funcionais iterados sobre funções-escada.

:class:`IteratedFunctional` representa ``(∫ (∫ f^s ν)^m μ dt)^{1/root}``, onde
a integral interna percorre (a, t) (``direction="left"``, tipo Cesàro) ou
(t, b) (``direction="right"``, tipo Copson). Essa é a forma comum das
quase-normas de Cesàro e Copson e dos dois lados da desigualdade canônica:

- Ces_{p,q}(u, v): s = p, ν = v^p, m = q/p, μ = u^q, root = q;
- lado esquerdo canônico: s = r, ν = v, m = q/r, μ = u, root = q;
- lado direito canônico: s = 1, ν = 1, m = p, μ = w, root = p.

Para f escada a integral interna é exata por célula (f constante, ν em forma
fechada) e a externa usa a regra graduada por célula. :meth:`tabulate`
pré-calcula tudo o que não depende dos valores de f, para o oráculo avaliar
milhares de funções com as mesmas quebras.
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Literal

import numpy as np

from cesembed.lib.config import NumericsConfig, resolve_numerics
from cesembed.lib.funcspace.exceptions import FuncSpaceError
from cesembed.lib.funcspace.models import StepFunction
from cesembed.lib.numerics import GradedRule, integrate_graded
from cesembed.lib.weights import (
    ExtReal,
    Interval,
    WeightExpr,
    ext_mul,
    ext_pow,
    integrate,
    integrate_many,
    to_float,
)

logger = logging.getLogger(__name__)

Direction = Literal["left", "right"]

# nós por chamada de integrate_many quando a integral parcial não é fechada
_CHUNK = 2048

# regra usada nas tabelas do oráculo: mais leve que a regra de NumericsConfig
_TABLE_RULE = GradedRule(cells=12, order=8, depth=1e-10, bisect=False)


def partial_integrals(
    nu: WeightExpr,
    lo: np.ndarray,
    hi: np.ndarray,
    cfg: NumericsConfig | None = None,
) -> np.ndarray:
    """∫_lo^hi ν elemento a elemento, em blocos para limitar a memória."""
    lo_a, hi_a = np.broadcast_arrays(
        np.asarray(lo, dtype=float), np.asarray(hi, dtype=float)
    )
    mono = nu.monomial()
    if mono is not None and mono.beta == 0:
        return mono.integral(1.0, lo_a, hi_a)
    lo_f, hi_f = lo_a.ravel(), hi_a.ravel()
    out = np.empty(lo_f.size)
    for start in range(0, lo_f.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        out[sl] = integrate_many(nu, 1.0, lo_f[sl], hi_f[sl], cfg)
    return out.reshape(lo_a.shape)


def _before(gm: np.ndarray) -> np.ndarray:
    """Somas exclusivas à esquerda: out[..., j] = Σ_{i<j} gm[..., i]."""
    zeros = np.zeros(gm.shape[:-1] + (1,))
    return np.concatenate((zeros, np.cumsum(gm, axis=-1)[..., :-1]), axis=-1)


def _after(gm: np.ndarray) -> np.ndarray:
    """Somas exclusivas à direita: out[..., j] = Σ_{i>j} gm[..., i]."""
    return _before(gm[..., ::-1])[..., ::-1]


class Functional(ABC):
    """Funcional homogêneo avaliado em funções-escada."""

    interval: Interval

    @abstractmethod
    def evaluate(self, f: StepFunction, cfg: NumericsConfig | None = None) -> ExtReal:
        raise NotImplementedError

    @abstractmethod
    def tabulate(self, breaks: np.ndarray, cfg: NumericsConfig | None = None):
        """Tabela reutilizável para funções com as quebras ``breaks``."""
        raise NotImplementedError

    def check_support(self, f: StepFunction) -> None:
        lo, hi = f.support
        if not self.interval.contains(lo, hi):
            raise FuncSpaceError(
                f"Suporte ({lo}, {hi}) fora do intervalo {self.interval}"
            )


# -----------------------------------------------------------------------------
# Funcional iterado
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class IteratedFunctional(Functional):
    f_power: float
    inner: WeightExpr
    outer_power: float
    outer: WeightExpr
    root: float
    interval: Interval
    direction: Direction = "left"

    def __post_init__(self) -> None:
        for name in ("f_power", "outer_power", "root"):
            value = float(getattr(self, name))
            if not (value > 0 and math.isfinite(value)):
                raise FuncSpaceError(f"{name} deve ser positivo e finito: {value}")
            object.__setattr__(self, name, value)
        if self.direction not in ("left", "right"):
            raise FuncSpaceError(f"Direção inválida: {self.direction!r}")

    # --- Peças comuns ------------------------------------------------------------
    def _accumulated(self, gm: np.ndarray) -> np.ndarray:
        return _before(gm) if self.direction == "left" else _after(gm)

    def _partial(
        self, lo: np.ndarray, hi: np.ndarray, t: np.ndarray, cfg: NumericsConfig | None
    ) -> np.ndarray:
        if self.direction == "left":
            return partial_integrals(self.inner, lo, t, cfg)
        return partial_integrals(self.inner, t, hi, cfg)

    def _tail_mass(self, first: float, last: float, cfg: NumericsConfig | None) -> ExtReal:
        """∫ μ na região em que a integral interna já é total."""
        a, b = self.interval.bounds
        sub = (last, b) if self.direction == "left" else (a, first)
        return integrate(self.outer, 1.0, sub, cfg)

    def _combine(self, cells: np.ndarray, total: np.ndarray, tail: ExtReal) -> np.ndarray:
        integral = cells + ext_mul(ext_pow(total, self.outer_power), tail)
        return ext_pow(integral, 1.0 / self.root)

    # --- Avaliação exata ---------------------------------------------------------
    def evaluate(self, f: StepFunction, cfg: NumericsConfig | None = None) -> ExtReal:
        """Valor do funcional em ``f`` (integral externa por célula, com teste de divergência)."""
        self.check_support(f)
        if f.is_zero:
            return 0.0
        cfg = resolve_numerics(cfg)
        breaks = np.asarray(f.breaks)
        lo, hi = breaks[:-1], breaks[1:]
        g = ext_pow(np.asarray(f.values), self.f_power)
        mass = partial_integrals(self.inner, lo, hi, cfg)
        gm = ext_mul(g, mass)
        acc = self._accumulated(gm)
        total = gm.sum()

        def integrand(t: np.ndarray) -> np.ndarray:
            part = self._partial(lo[:, None, None], hi[:, None, None], t, cfg)
            inner = acc[:, None, None] + ext_mul(g[:, None, None], part)
            return ext_mul(ext_pow(inner, self.outer_power), self.outer(t))

        per_cell = integrate_graded(integrand, lo, hi, cfg)
        tail = self._tail_mass(float(lo[0]), float(hi[-1]), cfg)
        value = to_float(self._combine(np.sum(per_cell), np.asarray(total), tail))
        logger.debug(
            "IteratedFunctional.evaluate: direction=%s cells=%d value=%s",
            self.direction,
            f.n_cells,
            value,
        )
        return value

    # --- Tabela para o oráculo ------------------------------------------------------
    def tabulate(
        self,
        breaks: np.ndarray,
        cfg: NumericsConfig | None = None,
        rule: GradedRule | None = None,
    ) -> FunctionalTable:
        rule = rule or _TABLE_RULE
        breaks = np.asarray(breaks, dtype=float)
        lo, hi = breaks[:-1], breaks[1:]
        t, jac = rule.map_nodes(lo, hi)
        n = lo.size
        t_flat = t.reshape(n, -1)
        lo_e, hi_e = lo[:, None], hi[:, None]
        partial = self._partial(lo_e, hi_e, t_flat, cfg)
        with np.errstate(all="ignore"):
            outer = np.asarray(self.outer(t_flat), dtype=float)
        node_weight = np.nan_to_num(outer, nan=0.0) * (jac * rule.weights).reshape(n, -1)
        return FunctionalTable(
            functional=self,
            breaks=breaks,
            mass=partial_integrals(self.inner, lo, hi, cfg),
            partial=partial,
            node_weight=node_weight,
            tail=self._tail_mass(float(lo[0]), float(hi[-1]), cfg),
        )


@dataclass(frozen=True)
class FunctionalTable:
    """Pré-cálculo de :class:`IteratedFunctional` para quebras fixas.

    Attributes:
        mass: ∫ ν em cada célula, formato ``(n,)``.
        partial: ∫ parcial de ν até cada nó da célula, formato ``(n, k)``.
        node_weight: μ(t)·jacobiano·peso de quadratura em cada nó.
        tail: ∫ μ na região em que a integral interna já é total.
    """

    functional: IteratedFunctional
    breaks: np.ndarray
    mass: np.ndarray
    partial: np.ndarray
    node_weight: np.ndarray
    tail: ExtReal

    def evaluate(self, values: np.ndarray) -> np.ndarray:
        """Avalia lotes de valores por célula: ``(..., n) -> (...)``."""
        fn = self.functional
        g = ext_pow(np.asarray(values, dtype=float), fn.f_power)
        gm = ext_mul(g, self.mass)
        acc = fn._accumulated(gm)
        total = gm.sum(axis=-1)
        inner = acc[..., None] + ext_mul(g[..., None], self.partial)
        cells = ext_mul(ext_pow(inner, fn.outer_power), self.node_weight).sum(axis=(-2, -1))
        return fn._combine(cells, total, self.tail)


# -----------------------------------------------------------------------------
# Funcional de Lebesgue
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class LebesgueFunctional(Functional):
    """``(Σ_i f_i^s ∫_{célula i} ν)^{1/root}``; com s = root = p e ν = w^p é ‖f‖_{p,w}."""

    f_power: float
    weight: WeightExpr
    root: float
    interval: Interval

    def __post_init__(self) -> None:
        for name in ("f_power", "root"):
            value = float(getattr(self, name))
            if not (value > 0 and math.isfinite(value)):
                raise FuncSpaceError(f"{name} deve ser positivo e finito: {value}")
            object.__setattr__(self, name, value)

    def evaluate(self, f: StepFunction, cfg: NumericsConfig | None = None) -> ExtReal:
        self.check_support(f)
        total = 0.0
        for x0, x1, val in f.cells():
            if val:
                mass = integrate(self.weight, 1.0, (x0, x1), cfg)
                total += to_float(ext_mul(val**self.f_power, mass))
        return to_float(ext_pow(total, 1.0 / self.root))

    def tabulate(
        self, breaks: np.ndarray, cfg: NumericsConfig | None = None
    ) -> LebesgueTable:
        breaks = np.asarray(breaks, dtype=float)
        cells = zip(breaks[:-1], breaks[1:])
        mass = np.array([integrate(self.weight, 1.0, cell, cfg) for cell in cells])
        return LebesgueTable(functional=self, breaks=breaks, mass=mass)


@dataclass(frozen=True)
class LebesgueTable:
    functional: LebesgueFunctional
    breaks: np.ndarray
    mass: np.ndarray

    def evaluate(self, values: np.ndarray) -> np.ndarray:
        fn = self.functional
        g = ext_pow(np.asarray(values, dtype=float), fn.f_power)
        return ext_pow(ext_mul(g, self.mass).sum(axis=-1), 1.0 / fn.root)
