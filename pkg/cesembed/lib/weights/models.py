"""Intervalos (a, b) com a finito e b possivelmente infinito."""

from __future__ import annotations

import math
from dataclasses import dataclass

from cesembed.lib.weights.exceptions import WeightDomainError

Bounds = tuple[float, float]


def format_number(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if float(x).is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(float(x))


@dataclass(frozen=True)
class Interval:
    """Intervalo aberto (a, b), 0 <= a < b <= inf na prática do pacote."""

    a: float
    b: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not math.isfinite(self.a):
            raise WeightDomainError(f"Extremo inferior deve ser finito: {self.a}")
        if not self.a < self.b:
            raise WeightDomainError(f"Intervalo vazio: ({self.a}, {self.b})")

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.b)

    @property
    def bounds(self) -> Bounds:
        return self.a, self.b

    def contains(self, lo: float, hi: float) -> bool:
        return self.a <= lo and hi <= self.b

    def __str__(self) -> str:
        return f"({format_number(self.a)},{format_number(self.b)})"


def as_bounds(sub: Interval | Bounds) -> Bounds:
    if isinstance(sub, Interval):
        return sub.bounds
    lo, hi = sub
    return float(lo), float(hi)
