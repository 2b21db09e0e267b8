"""Exceções do pacote reduce."""

from __future__ import annotations


class ReductionError(Exception):
    """Erro genérico ao reescrever um problema de mergulho."""


class UnsupportedProblemError(ReductionError):
    """O problema está fora do caminho suportado (ex.: expoente infinito)."""


class HypothesisViolationError(ReductionError):
    """A hipótese 0 < ∫_x^b w < inf do problema canônico não vale."""
