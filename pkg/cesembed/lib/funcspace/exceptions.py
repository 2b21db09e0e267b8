"""Exceções do pacote funcspace."""

from __future__ import annotations


class FuncSpaceError(Exception):
    """Erro genérico na avaliação de normas em espaços de funções."""


class StepFunctionError(FuncSpaceError):
    """Função-escada malformada (quebras fora de ordem, valores negativos)."""


class SpaceSpecError(FuncSpaceError):
    """Especificação de espaço inválida (condição de quase-norma violada)."""


class SpaceParseError(SpaceSpecError):
    """Texto de especificação malformado."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (posição {position})")
        self.message = message
        self.position = position
