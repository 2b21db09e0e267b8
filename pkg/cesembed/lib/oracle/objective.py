"""A razão LHS/RHS como objetivo do oráculo.

O numerador e o denominador são funcionais homogêneos de grau 1; a razão é
portanto invariante por escala de f. O problema canônico usa

- LHS = (∫ (∫_a^t f^r v)^{q/r} u)^{1/q};
- RHS = (∫ (∫_a^t f)^p w)^{1/p};

e um mergulho X ↪ Y usa ‖f‖_Y / ‖f‖_X com os funcionais de cada espaço.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from cesembed.lib.config import NumericsConfig
from cesembed.lib.funcspace import (
    FuncSpaceError,
    Functional,
    FunctionalTable,
    IteratedFunctional,
    LebesgueTable,
    StepFunction,
    functional_for,
)
from cesembed.lib.oracle.exceptions import OracleError, UndefinedRatioError
from cesembed.lib.reduce import CanonicalProblem, EmbeddingProblem
from cesembed.lib.weights import ExtReal, Power, ext_div, to_float

logger = logging.getLogger(__name__)

# linhas por chamada das tabelas
_BATCH = 256


@dataclass(frozen=True)
class RatioObjective:
    numerator: Functional
    denominator: Functional

    def ratio(self, f: StepFunction, cfg: NumericsConfig | None = None) -> ExtReal:
        """Razão exata (integrais internas exatas por célula).

        Raises:
            UndefinedRatioError: f ≡ 0.
            OracleError: suporte de f fora do domínio.
        """
        if f.is_zero:
            raise UndefinedRatioError("Razão indefinida para f ≡ 0")
        try:
            top = self.numerator.evaluate(f, cfg)
            bottom = self.denominator.evaluate(f, cfg)
        except FuncSpaceError as exc:
            raise OracleError(str(exc)) from exc
        return to_float(ext_div(top, bottom))

    def table(self, breaks: np.ndarray, cfg: NumericsConfig | None = None) -> RatioTable:
        return RatioTable(
            self.numerator.tabulate(breaks, cfg), self.denominator.tabulate(breaks, cfg)
        )


@dataclass(frozen=True)
class RatioTable:
    """Avaliação em lote da razão para funções com quebras fixas."""

    numerator: FunctionalTable | LebesgueTable
    denominator: FunctionalTable | LebesgueTable

    def evaluate(self, values: np.ndarray) -> np.ndarray:
        """Razões para valores por célula ``(m, n) -> (m,)``, em blocos."""
        values = np.atleast_2d(np.asarray(values, dtype=float))
        out = np.empty(values.shape[0])
        for start in range(0, values.shape[0], _BATCH):
            chunk = values[start : start + _BATCH]
            with np.errstate(all="ignore"):
                top = self.numerator.evaluate(chunk)
                bottom = self.denominator.evaluate(chunk)
            out[start : start + _BATCH] = ext_div(top, bottom)
        return np.nan_to_num(out, nan=0.0)


def canonical_objective(c: CanonicalProblem) -> RatioObjective:
    p, q, r = c.exponents
    lhs = IteratedFunctional(r, c.v, q / r, c.u, q, c.interval, "left")
    rhs = IteratedFunctional(1.0, Power(0.0), p, c.w, p, c.interval, "left")
    return RatioObjective(lhs, rhs)


def embedding_objective(e: EmbeddingProblem) -> RatioObjective:
    """‖f‖_target / ‖f‖_source para quaisquer lados Ces/Cop/Leb com expoentes finitos.

    Raises:
        OracleError: algum expoente infinito.
    """
    for side in (e.source, e.target):
        if not side.finite_exponents:
            raise OracleError(f"O oráculo exige expoentes finitos: {side}")
    return RatioObjective(functional_for(e.target), functional_for(e.source))


def ratio(c: CanonicalProblem, f: StepFunction, cfg: NumericsConfig | None = None) -> ExtReal:
    """LHS/RHS da desigualdade canônica em ``f``."""
    value = canonical_objective(c).ratio(f, cfg)
    logger.debug("ratio: cells=%d value=%s", f.n_cells, value)
    return value
