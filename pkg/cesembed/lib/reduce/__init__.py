"""Reescritas de problemas de mergulho para a desigualdade canônica."""

from __future__ import annotations

from cesembed.lib.reduce.canonical import (
    TRIVIAL_VERDICT,
    canonicalize,
    degenerate_sides,
    detect_degenerate,
    triviality_check,
)
from cesembed.lib.reduce.exceptions import (
    HypothesisViolationError,
    ReductionError,
    UnsupportedProblemError,
)
from cesembed.lib.reduce.models import CanonicalProblem, EmbeddingProblem
from cesembed.lib.reduce.transforms import (
    invert_weight,
    multiplier_to_embedding,
    reflect_weight,
    tilde_transform,
    transform_side,
)

__all__ = [
    "ReductionError",
    "UnsupportedProblemError",
    "HypothesisViolationError",
    "CanonicalProblem",
    "EmbeddingProblem",
    "canonicalize",
    "tilde_transform",
    "transform_side",
    "reflect_weight",
    "invert_weight",
    "multiplier_to_embedding",
    "detect_degenerate",
    "degenerate_sides",
    "triviality_check",
    "TRIVIAL_VERDICT",
]
