"""Oráculo numérico: maximização da razão sobre funções-escada."""

from __future__ import annotations

from cesembed.lib.oracle.ascent import (
    ascend,
    estimate_best_constant,
    estimate_original_constant,
    witness_candidates,
    witness_lower_bound,
)
from cesembed.lib.oracle.exceptions import (
    OracleConfigError,
    OracleError,
    UndefinedRatioError,
)
from cesembed.lib.oracle.ladder import derive_ladder, rung_breaks
from cesembed.lib.oracle.models import (
    TRACE_COLUMNS,
    OracleConfig,
    OracleResult,
    growth_diverges,
)
from cesembed.lib.oracle.objective import (
    RatioObjective,
    RatioTable,
    canonical_objective,
    embedding_objective,
    ratio,
)

__all__ = [
    "OracleError",
    "UndefinedRatioError",
    "OracleConfigError",
    "OracleConfig",
    "OracleResult",
    "TRACE_COLUMNS",
    "growth_diverges",
    "derive_ladder",
    "rung_breaks",
    "RatioObjective",
    "RatioTable",
    "canonical_objective",
    "embedding_objective",
    "ratio",
    "witness_candidates",
    "witness_lower_bound",
    "ascend",
    "estimate_best_constant",
    "estimate_original_constant",
]
