"""Configuração e resultado do oráculo."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from typing import Any

import pandas as pd

from cesembed.lib.funcspace import StepFunction
from cesembed.lib.oracle.exceptions import OracleConfigError
from cesembed.lib.weights import ExtReal, format_ext

Domain = tuple[float, float]

TRACE_COLUMNS = ["domain_lo", "domain_hi", "grid", "ratio"]


@dataclass(frozen=True)
class OracleConfig:
    """Parâmetros da maximização da razão.

    Attributes:
        grid_size: células da grade em cada degrau.
        truncation_ladder: domínios crescentes por inclusão; ``None`` deriva
            a escada de ``ladder_rungs``, ``ladder_base`` e ``rung_refinement``.
        restarts: reinícios da subida (o primeiro parte da melhor testemunha).
        ascent_iters: limite de iterações da subida por reinício.
        growth_factor_infinite: crescimento entre degraus consecutivos que,
            repetido duas vezes seguidas, caracteriza constante infinita.
        ladder_rungs: degraus da escada derivada.
        ladder_base: b = inf usa os domínios (a, a + base^k).
        rung_refinement: fator pelo qual a menor distância relativa às
            extremidades encolhe a cada degrau.
        fd_step: passo das diferenças finitas em log f.
        initial_step: passo inicial η da subida.
        min_step: a subida para quando η fica abaixo deste valor.
        seed: semente da geração aleatória.
    """

    grid_size: int = 128
    truncation_ladder: tuple[Domain, ...] | None = None
    restarts: int = 16
    ascent_iters: int = 500
    growth_factor_infinite: float = 10.0
    ladder_rungs: int = 6
    ladder_base: float = 4.0
    rung_refinement: float = 1e-2
    fd_step: float = 1e-4
    initial_step: float = 1.0
    min_step: float = 1e-8
    seed: int = 0

    def __post_init__(self) -> None:
        if self.grid_size < 8:
            raise OracleConfigError(f"grid_size deve ser >= 8: {self.grid_size}")
        if self.restarts < 1 or self.ascent_iters < 0:
            raise OracleConfigError("restarts >= 1 e ascent_iters >= 0")
        if self.growth_factor_infinite <= 1:
            raise OracleConfigError("growth_factor_infinite deve ser > 1")
        if self.ladder_rungs < 1 or self.ladder_base <= 1:
            raise OracleConfigError("ladder_rungs >= 1 e ladder_base > 1")
        if not (0 < self.rung_refinement < 1):
            raise OracleConfigError(f"rung_refinement em (0, 1): {self.rung_refinement}")
        if not (0 < self.fd_step < 1 and 0 < self.min_step <= self.initial_step):
            raise OracleConfigError("Passos inválidos: exige 0 < min_step <= initial_step")
        if self.truncation_ladder is not None:
            ladder = tuple((float(lo), float(hi)) for lo, hi in self.truncation_ladder)
            _check_ladder(ladder)
            object.__setattr__(self, "truncation_ladder", ladder)

    def with_overrides(self, **overrides: Any) -> OracleConfig:
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise OracleConfigError(f"Chaves desconhecidas: {unknown}")
        return replace(self, **overrides)


def _check_ladder(ladder: tuple[Domain, ...]) -> None:
    if not ladder:
        raise OracleConfigError("truncation_ladder vazia")
    for lo, hi in ladder:
        if not lo < hi:
            raise OracleConfigError(f"Domínio vazio na escada: ({lo}, {hi})")
    for (lo0, hi0), (lo1, hi1) in zip(ladder[:-1], ladder[1:]):
        if not (lo1 <= lo0 and hi0 <= hi1 and (lo1, hi1) != (lo0, hi0)):
            raise OracleConfigError(
                f"Escada deve crescer por inclusão: ({lo0}, {hi0}) -> ({lo1}, {hi1})"
            )


@dataclass(frozen=True)
class OracleResult:
    """Melhor razão encontrada e o rastro da escada.

    Attributes:
        best_ratio: maior razão sobre todos os degraus (cota inferior da
            melhor constante).
        argmax: função-escada que atinge ``best_ratio``.
        trace: DataFrame com colunas ``domain_lo``, ``domain_hi``, ``grid``
            e ``ratio``, um degrau por linha.
        diverging: a razão cresce sem limite ao longo da escada.
    """

    best_ratio: ExtReal
    argmax: StepFunction
    trace: pd.DataFrame = field(compare=False)
    diverging: bool

    @property
    def rungs(self) -> list[ExtReal]:
        return [float(x) for x in self.trace["ratio"]]

    @property
    def ladder_trace(self) -> list[tuple[Domain, int, ExtReal]]:
        return [
            ((float(row.domain_lo), float(row.domain_hi)), int(row.grid), float(row.ratio))
            for row in self.trace.itertuples(index=False)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "best_ratio": format_ext(self.best_ratio),
            "diverging": self.diverging,
            "rungs": [format_ext(x) for x in self.rungs],
            "trace": [
                {
                    "domain": [format_ext(lo), format_ext(hi)],
                    "grid": grid,
                    "ratio": format_ext(ratio),
                }
                for (lo, hi), grid, ratio in self.ladder_trace
            ],
            "argmax": self.argmax.to_dict(),
        }


def growth_diverges(rungs: list[ExtReal], factor: float) -> bool:
    """Infinito em algum degrau ou crescimento >= ``factor`` duas vezes seguidas."""
    if any(math.isinf(x) for x in rungs):
        return True
    streak = 0
    for prev, cur in zip(rungs[:-1], rungs[1:]):
        streak = streak + 1 if prev > 0 and cur >= factor * prev else 0
        if streak >= 2:
            return True
    return False
