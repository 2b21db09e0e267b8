"""Funções-escada e quase-normas de Lebesgue, Cesàro e Copson com pesos."""

from __future__ import annotations

from cesembed.lib.funcspace.exceptions import (
    FuncSpaceError,
    SpaceParseError,
    SpaceSpecError,
    StepFunctionError,
)
from cesembed.lib.funcspace.iterated import (
    FunctionalTable,
    Functional,
    IteratedFunctional,
    LebesgueFunctional,
    LebesgueTable,
    partial_integrals,
)
from cesembed.lib.funcspace.models import (
    SPACE_KINDS,
    Exponent,
    SpaceKind,
    SpaceSpec,
    StepFunction,
    as_exponent,
    classical_cesaro,
    classical_copson,
    format_exponent,
    format_spec,
    is_finite_exponent,
)
from cesembed.lib.funcspace.norms import (
    NormTail,
    functional_for,
    lebesgue_norm,
    pp_weight,
    space_norm,
)
from cesembed.lib.funcspace.parsing import parse_spec

__all__ = [
    "FuncSpaceError",
    "StepFunctionError",
    "SpaceSpecError",
    "SpaceParseError",
    "StepFunction",
    "SpaceSpec",
    "SpaceKind",
    "SPACE_KINDS",
    "Exponent",
    "as_exponent",
    "format_exponent",
    "is_finite_exponent",
    "classical_cesaro",
    "classical_copson",
    "parse_spec",
    "format_spec",
    "Functional",
    "IteratedFunctional",
    "LebesgueFunctional",
    "FunctionalTable",
    "LebesgueTable",
    "partial_integrals",
    "NormTail",
    "functional_for",
    "lebesgue_norm",
    "pp_weight",
    "space_norm",
]
