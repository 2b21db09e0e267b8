"""Leitura do arquivo YAML de configuração.

O arquivo é um mapeamento plano com os campos de :class:`OracleConfig` e,
opcionalmente, uma sub-chave ``numerics:`` com os campos de
:class:`NumericsConfig`::

    grid_size: 64
    restarts: 4
    seed: 7
    numerics:
      sup_grid: 128
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import yaml

from cesembed.lib.config.exceptions import ConfigError
from cesembed.lib.config.settings import DEFAULT_NUMERICS, NumericsConfig
from cesembed.lib.oracle import OracleConfig, OracleConfigError

logger = logging.getLogger(__name__)


def load_yaml(path: Path | str) -> dict[str, Any]:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except FileNotFoundError as exc:
        raise ConfigError(f"Arquivo de configuração não encontrado: {path}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"YAML inválido em {path}: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError("O arquivo de configuração deve definir um mapeamento")
    return data


def _ladder(value: Any) -> tuple[tuple[float, float], ...]:
    try:
        return tuple((float(lo), float(hi)) for lo, hi in value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"truncation_ladder deve ser uma lista de pares: {value!r}") from exc


def build_configs(
    data: Mapping[str, Any],
    *,
    oracle: OracleConfig | None = None,
    numerics: NumericsConfig | None = None,
) -> tuple[OracleConfig, NumericsConfig]:
    """Aplica um mapeamento de configuração sobre os padrões (ou sobre ``oracle``/``numerics``).

    Raises:
        ConfigError: chave desconhecida ou valor inválido.
    """
    flat = dict(data)
    nested = flat.pop("numerics", None) or {}
    if not isinstance(nested, Mapping):
        raise ConfigError("'numerics' deve ser um mapeamento")
    if "truncation_ladder" in flat and flat["truncation_ladder"] is not None:
        flat["truncation_ladder"] = _ladder(flat["truncation_ladder"])
    try:
        oracle_cfg = (oracle or OracleConfig()).with_overrides(**flat)
    except OracleConfigError as exc:
        raise ConfigError(str(exc)) from exc
    except TypeError as exc:
        raise ConfigError(f"Valor inválido na configuração: {exc}") from exc
    try:
        numerics_cfg = (numerics or DEFAULT_NUMERICS).with_overrides(**dict(nested))
    except TypeError as exc:
        raise ConfigError(f"Valor inválido em numerics: {exc}") from exc
    logger.debug("build_configs: oracle=%s numerics=%s", oracle_cfg, numerics_cfg)
    return oracle_cfg, numerics_cfg


def load_config(path: Path | str) -> tuple[OracleConfig, NumericsConfig]:
    """Lê ``path`` e devolve as configurações do oráculo e numéricas."""
    return build_configs(load_yaml(path))
