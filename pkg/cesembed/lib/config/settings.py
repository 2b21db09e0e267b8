"""Configurações numéricas compartilhadas (tolerâncias, grades, quadratura)."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Any

from cesembed.lib.config.exceptions import ConfigError


@dataclass(frozen=True)
class NumericsConfig:
    """Tolerâncias e tamanhos de grade usados pelos avaliadores.

    Attributes:
        tau_int: tolerância relativa das integrais por quadratura.
        tau_sup: tolerância relativa do refinamento de supremos.
        gl_order: ordem de Gauss–Legendre por célula.
        quad_cells: número de células graduadas entre as extremidades.
        quad_depth: menor distância relativa a uma extremidade alcançada
            pelas regras graduadas e pelas grades de supremo.
        sup_grid: pontos da grade log-uniforme do supremo externo.
        nested_sup_grid: pontos da grade em supremos de terceiro nível.
        sup_top_k: quantas amostras são refinadas por seção áurea.
        golden_max_iter: limite de iterações da seção áurea.
        divergence_growth: fator de crescimento que caracteriza divergência.
    """

    tau_int: float = 1e-10
    tau_sup: float = 1e-8
    gl_order: int = 16
    quad_cells: int = 24
    quad_depth: float = 1e-12
    sup_grid: int = 256
    nested_sup_grid: int = 64
    sup_top_k: int = 3
    golden_max_iter: int = 60
    divergence_growth: float = 10.0

    def __post_init__(self) -> None:
        if not (0 < self.tau_int < 1 and 0 < self.tau_sup < 1):
            raise ConfigError("Tolerâncias devem estar em (0, 1)")
        if self.gl_order < 2 or self.quad_cells < 2:
            raise ConfigError("gl_order e quad_cells devem ser >= 2")
        if not (0 < self.quad_depth < 0.5):
            raise ConfigError(f"quad_depth inválido: {self.quad_depth}")
        if self.sup_grid < 8 or self.nested_sup_grid < 8:
            raise ConfigError("Grades de supremo precisam de ao menos 8 pontos")
        if self.sup_top_k < 1:
            raise ConfigError("sup_top_k deve ser >= 1")
        if self.divergence_growth <= 1:
            raise ConfigError("divergence_growth deve ser > 1")

    def with_overrides(self, **overrides: Any) -> NumericsConfig:
        known = {f.name for f in fields(self)}
        unknown = sorted(set(overrides) - known)
        if unknown:
            raise ConfigError(f"Chaves desconhecidas em numerics: {unknown}")
        return replace(self, **overrides)


DEFAULT_NUMERICS = NumericsConfig()


def resolve_numerics(cfg: NumericsConfig | None) -> NumericsConfig:
    return DEFAULT_NUMERICS if cfg is None else cfg
