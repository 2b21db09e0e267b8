"""Exceções do pacote oracle."""

from __future__ import annotations


class OracleError(Exception):
    """Erro genérico do oráculo numérico."""


class UndefinedRatioError(OracleError):
    """A razão não está definida (f ≡ 0)."""


class OracleConfigError(OracleError):
    """Parâmetros inválidos em :class:`OracleConfig`."""
