"""Veredito do lado teórico: regime, constantes exigidas e estimativa."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any

from cesembed.lib.config import NumericsConfig
from cesembed.lib.constants.evaluators import evaluate_constant
from cesembed.lib.constants.regimes import Regime, classify_regime
from cesembed.lib.reduce import CanonicalProblem
from cesembed.lib.weights import ExtReal, format_ext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstantsReport:
    """Constantes exigidas pelo regime e a estimativa da melhor constante.

    ``estimate`` é a soma das constantes exigidas, equivalente à melhor
    constante a menos de fatores absolutos; ``finite`` vale se e somente se
    todas as constantes exigidas são finitas.
    """

    values: dict[str, ExtReal]
    regime: Regime
    estimate: ExtReal
    finite: bool

    @classmethod
    def from_values(cls, regime: Regime, values: dict[str, ExtReal]) -> ConstantsReport:
        ordered = {name: values[name] for name in regime.required_constants}
        finite = all(math.isfinite(v) for v in ordered.values())
        estimate = math.fsum(ordered.values()) if finite else math.inf
        return cls(values=ordered, regime=regime, estimate=estimate, finite=finite)

    def to_dict(self) -> dict[str, Any]:
        return {
            "regime": self.regime.id,
            "constants": {k: format_ext(v) for k, v in self.values.items()},
            "estimate": format_ext(self.estimate),
            "finite": self.finite,
        }


def theorem_verdict(
    c: CanonicalProblem, cfg: NumericsConfig | None = None
) -> ConstantsReport:
    """Classifica (p, q, r) e avalia exatamente as constantes do regime.

    Raises:
        RegimeError: r > 1 (use ``triviality_check``) ou expoente inválido.
    """
    regime = classify_regime(c.p, c.q, c.r)
    values = {name: evaluate_constant(name, c, cfg) for name in regime.required_constants}
    report = ConstantsReport.from_values(regime, values)
    logger.debug(
        "theorem_verdict: regime=%s values=%s finite=%s",
        regime.id,
        values,
        report.finite,
    )
    return report
