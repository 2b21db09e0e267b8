"""Configurações numéricas do cesembed.

O carregamento de arquivos YAML fica em `cesembed.lib.config.loader`.
"""

from __future__ import annotations

from cesembed.lib.config.exceptions import ConfigError
from cesembed.lib.config.settings import (
    DEFAULT_NUMERICS,
    NumericsConfig,
    resolve_numerics,
)

__all__ = [
    "ConfigError",
    "NumericsConfig",
    "DEFAULT_NUMERICS",
    "resolve_numerics",
]
