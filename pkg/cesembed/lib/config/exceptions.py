"""Exceções do pacote config."""

from __future__ import annotations


class ConfigError(Exception):
    """Erro ao ler ou validar configurações numéricas/oráculo."""
