"""Exceções do pacote constants."""

from __future__ import annotations


class ConstantsError(Exception):
    """Erro genérico na classificação ou avaliação das constantes."""


class RegimeError(ConstantsError):
    """Expoentes fora do conjunto admissível (r > 1, não positivos ou infinitos)."""


class RegimeMisuseError(ConstantsError):
    """Constante avaliada fora da faixa de expoentes em que está definida."""
