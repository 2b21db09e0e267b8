"""Regimes de expoentes e constantes C1–C7 da desigualdade canônica."""

from __future__ import annotations

from cesembed.lib.constants.evaluators import (
    CONSTANT_REGISTRY,
    eval_C1,
    eval_C2,
    eval_C3,
    eval_C4,
    eval_C5,
    eval_C6,
    eval_C7,
    evaluate_constant,
    fubini_constant,
    register_constant,
)
from cesembed.lib.constants.exceptions import (
    ConstantsError,
    RegimeError,
    RegimeMisuseError,
)
from cesembed.lib.constants.kernels import Kernels
from cesembed.lib.constants.regimes import (
    REGIME_REGISTRY,
    Regime,
    classify_regime,
    register_regime,
)
from cesembed.lib.constants.verdict import ConstantsReport, theorem_verdict

__all__ = [
    "ConstantsError",
    "RegimeError",
    "RegimeMisuseError",
    "Regime",
    "REGIME_REGISTRY",
    "register_regime",
    "classify_regime",
    "Kernels",
    "CONSTANT_REGISTRY",
    "register_constant",
    "evaluate_constant",
    "eval_C1",
    "eval_C2",
    "eval_C3",
    "eval_C4",
    "eval_C5",
    "eval_C6",
    "eval_C7",
    "fubini_constant",
    "ConstantsReport",
    "theorem_verdict",
]
