"""Aritmética em [0, +inf] com as convenções 1/inf = 0, 0/0 = 0 e 0·inf = 0."""

from __future__ import annotations

import math

import numpy as np

INF = math.inf

ExtReal = float


def ext_mul(x: np.ndarray | float, y: np.ndarray | float) -> np.ndarray:
    x_a = np.asarray(x, dtype=float)
    y_a = np.asarray(y, dtype=float)
    with np.errstate(invalid="ignore", over="ignore"):
        prod = x_a * y_a
    return np.where((x_a == 0) | (y_a == 0), 0.0, prod)


def ext_div(x: np.ndarray | float, y: np.ndarray | float) -> np.ndarray:
    x_a = np.asarray(x, dtype=float)
    y_a = np.asarray(y, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        quot = x_a / y_a
    quot = np.where(x_a == 0, 0.0, quot)
    return np.where(np.isinf(y_a) & np.isfinite(x_a), 0.0, quot)


def ext_pow(x: np.ndarray | float, e: float) -> np.ndarray:
    """Potência com 0^(negativo) = inf e inf^(negativo) = 0."""
    x_a = np.asarray(x, dtype=float)
    if e == 0:
        return np.ones_like(x_a)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        return np.power(x_a, e)


def to_float(value: np.ndarray | float) -> ExtReal:
    out = float(np.asarray(value, dtype=float))
    return 0.0 if math.isnan(out) else out


def format_ext(value: float) -> float | str:
    """Representação serializável: ``"inf"`` para infinito."""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return float(value)
