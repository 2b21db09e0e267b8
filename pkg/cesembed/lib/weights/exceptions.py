"""Exceções do pacote weights."""

from __future__ import annotations


class WeightError(Exception):
    """Erro genérico ao construir ou avaliar pesos."""


class WeightDomainError(WeightError):
    """Subintervalo fora do domínio em que o peso está definido."""


class WeightParameterError(WeightError):
    """Parâmetro fora da faixa admissível (ex.: r fora de (0, 1])."""


class UnsupportedWeightError(WeightError):
    """Uma reescrita levaria o peso para fora da família fechada."""


class WeightParseError(WeightError):
    """Texto malformado na DSL de pesos.

    Attributes:
        position: índice (no texto sem espaços) onde o erro foi detectado.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (posição {position})")
        self.message = message
        self.position = position
