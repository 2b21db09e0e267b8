"""Requisições e relatórios do pipeline de verificação."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Literal

from cesembed.lib.config import DEFAULT_NUMERICS, NumericsConfig
from cesembed.lib.constants import ConstantsReport
from cesembed.lib.oracle import OracleConfig, OracleResult
from cesembed.lib.weights import ExtReal, format_ext

Command = Literal["check", "constants", "oracle", "norm", "multiplier"]
OutputFormat = Literal["json", "text"]

COMMANDS: tuple[str, ...] = ("check", "constants", "oracle", "norm", "multiplier")

# códigos de saída da linha de comando
EXIT_FINITE = 0
EXIT_INFINITE = 1
EXIT_TRIVIAL = 2
EXIT_ERROR = 3


@dataclass(frozen=True)
class RunRequest:
    """Uma execução da linha de comando, com os espaços ainda em forma textual.

    Attributes:
        command: ``check``, ``constants``, ``oracle``, ``norm`` ou ``multiplier``.
        source: espaço de partida (``ces:p,q:u,v@(a,b)``).
        target: espaço de chegada.
        space: espaço do comando ``norm``.
        f_path: JSON da função-escada do comando ``norm``.
        g: peso multiplicador (DSL de pesos) do comando ``multiplier``.
        oracle_cfg: configuração do oráculo, já com a semente aplicada.
        numerics: tolerâncias numéricas.
        output: ``json`` ou ``text``.
    """

    command: Command
    source: str | None = None
    target: str | None = None
    space: str | None = None
    f_path: str | None = None
    g: str | None = None
    oracle_cfg: OracleConfig = field(default_factory=OracleConfig)
    numerics: NumericsConfig = DEFAULT_NUMERICS
    output: OutputFormat = "json"

    @property
    def seed(self) -> int:
        return self.oracle_cfg.seed


@dataclass(frozen=True)
class EmbeddingReport:
    """Resultado de ``check``/``constants``/``oracle``/``multiplier``.

    ``agreement`` (oráculo/teoria) só é preenchido quando os dois lados são
    finitos e positivos.
    """

    problem: str
    canonical: dict[str, str] | None = None
    theorem: ConstantsReport | None = None
    oracle: OracleResult | None = None
    finite: bool = False
    trivial: bool = False
    notes: tuple[str, ...] = ()

    @property
    def regime(self) -> str | None:
        return self.theorem.regime.id if self.theorem else None

    @property
    def estimate(self) -> ExtReal | None:
        return self.theorem.estimate if self.theorem else None

    @property
    def agreement(self) -> float | None:
        if self.theorem is None or self.oracle is None:
            return None
        est, best = self.theorem.estimate, self.oracle.best_ratio
        if not (math.isfinite(est) and math.isfinite(best)) or est <= 0:
            return None
        return best / est

    @property
    def exit_code(self) -> int:
        if self.trivial:
            return EXIT_TRIVIAL
        return EXIT_FINITE if self.finite else EXIT_INFINITE

    def to_dict(self) -> dict[str, Any]:
        theorem = self.theorem
        return {
            "canonical": self.canonical,
            "regime": self.regime,
            "constants": (
                {k: format_ext(v) for k, v in theorem.values.items()} if theorem else None
            ),
            "estimate": format_ext(theorem.estimate) if theorem else None,
            "finite": self.finite,
            "oracle": self.oracle.to_dict() if self.oracle else None,
            "agreement": self.agreement,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class NormReport:
    space: str
    norm: ExtReal

    @property
    def finite(self) -> bool:
        return math.isfinite(self.norm)

    @property
    def exit_code(self) -> int:
        return EXIT_FINITE if self.finite else EXIT_INFINITE

    def to_dict(self) -> dict[str, Any]:
        return {"space": self.space, "norm": format_ext(self.norm), "finite": self.finite}


Report = EmbeddingReport | NormReport
