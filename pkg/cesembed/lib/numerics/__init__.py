"""Quadratura e busca de supremos compartilhadas pelos avaliadores."""

from __future__ import annotations

from cesembed.lib.numerics.quadrature import (
    EndSide,
    GradedRule,
    integrate_graded,
    unit_gauss_legendre,
)
from cesembed.lib.numerics.search import log_grid, sup_search, to_points

__all__ = [
    "EndSide",
    "GradedRule",
    "integrate_graded",
    "unit_gauss_legendre",
    "log_grid",
    "sup_search",
    "to_points",
]
