"""Pesos em forma fechada, integrais, supremos essenciais e V_r."""

from __future__ import annotations

from cesembed.lib.weights.dsl import (
    WEIGHT_REGISTRY,
    Scanner,
    format_weight,
    parse_expr,
    parse_weight,
    register_weight,
)
from cesembed.lib.weights.exceptions import (
    UnsupportedWeightError,
    WeightDomainError,
    WeightError,
    WeightParameterError,
    WeightParseError,
)
from cesembed.lib.weights.expr import (
    Monomial,
    Piecewise,
    Power,
    PowerLog,
    PowerOf,
    Product,
    Scaled,
    WeightExpr,
    constant,
    integrable_near,
    is_unit,
    power_integral,
    simplify,
)
from cesembed.lib.weights.extreal import (
    INF,
    ExtReal,
    ext_div,
    ext_mul,
    ext_pow,
    format_ext,
    to_float,
)
from cesembed.lib.weights.integrals import (
    V_r,
    V_r_many,
    ess_sup,
    ess_sup_many,
    integrate,
    integrate_many,
)
from cesembed.lib.weights.models import Bounds, Interval, as_bounds, format_number

__all__ = [
    "WeightError",
    "WeightDomainError",
    "WeightParameterError",
    "WeightParseError",
    "UnsupportedWeightError",
    "Interval",
    "Bounds",
    "as_bounds",
    "format_number",
    "INF",
    "ExtReal",
    "ext_mul",
    "ext_div",
    "ext_pow",
    "format_ext",
    "to_float",
    "WeightExpr",
    "Monomial",
    "Power",
    "PowerLog",
    "Piecewise",
    "Product",
    "Scaled",
    "PowerOf",
    "constant",
    "is_unit",
    "simplify",
    "integrable_near",
    "power_integral",
    "integrate",
    "integrate_many",
    "ess_sup",
    "ess_sup_many",
    "V_r",
    "V_r_many",
    "WEIGHT_REGISTRY",
    "Scanner",
    "register_weight",
    "parse_expr",
    "parse_weight",
    "format_weight",
]
