"""Problemas de mergulho e a desigualdade canônica."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from cesembed.lib.config import NumericsConfig
from cesembed.lib.funcspace import (
    Exponent,
    SpaceSpec,
    SpaceSpecError,
    as_exponent,
    format_exponent,
    is_finite_exponent,
)
from cesembed.lib.reduce.exceptions import (
    HypothesisViolationError,
    ReductionError,
    UnsupportedProblemError,
)
from cesembed.lib.weights import (
    Interval,
    WeightDomainError,
    WeightExpr,
    format_number,
    integrate,
    simplify,
)

# distância relativa ao extremo a usada na checagem da hipótese
_HYPOTHESIS_PROBE = 1e-6


@dataclass(frozen=True)
class EmbeddingProblem:
    """Mergulho ``source ↪ target`` entre dois espaços no mesmo intervalo."""

    source: SpaceSpec
    target: SpaceSpec

    def __post_init__(self) -> None:
        if self.source.interval != self.target.interval:
            raise ReductionError(
                f"Espaços em intervalos diferentes: {self.source.interval} e "
                f"{self.target.interval}"
            )

    @property
    def interval(self) -> Interval:
        return self.source.interval

    @property
    def kinds(self) -> tuple[str, str]:
        return self.source.kind, self.target.kind

    def with_sides(
        self, source: SpaceSpec | None = None, target: SpaceSpec | None = None
    ) -> EmbeddingProblem:
        return EmbeddingProblem(source or self.source, target or self.target)

    def __str__(self) -> str:
        return f"{self.source} -> {self.target}"


def _as_theorem_exponent(name: str, value: Any) -> Exponent:
    try:
        out = as_exponent(value)
    except SpaceSpecError as exc:
        raise UnsupportedProblemError(f"{name} inválido: {value!r}") from exc
    if not is_finite_exponent(out):
        raise UnsupportedProblemError(f"{name} deve ser finito")
    return out


@dataclass(frozen=True)
class CanonicalProblem:
    """Dados (p, q, r, u, v, w) da desigualdade

    ``(∫ (∫_a^t f^r v)^{q/r} u)^{1/q} <= C (∫ (∫_a^t f)^p w)^{1/p}``.

    Os expoentes ficam racionais quando possível, para que a classificação
    nas fronteiras (q = 1, p = r, ...) seja exata.
    """

    p: Exponent
    q: Exponent
    r: Exponent
    u: WeightExpr
    v: WeightExpr
    w: WeightExpr
    interval: Interval
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _as_theorem_exponent(name, getattr(self, name)))
        if self.check:
            self.check_hypothesis()

    @property
    def exponents(self) -> tuple[float, float, float]:
        return float(self.p), float(self.q), float(self.r)

    def check_hypothesis(self, cfg: NumericsConfig | None = None) -> None:
        """Checa 0 < ∫_x^b w < inf perto de a (e portanto em todo x de (a, b)).

        Raises:
            HypothesisViolationError: a integral diverge ou se anula.
        """
        a, b = self.interval.bounds
        span = 1.0 if math.isinf(b) else b - a
        for weight in (self.u, self.v, self.w):
            try:
                weight.check_contains(a, b)
            except WeightDomainError as exc:
                raise HypothesisViolationError(str(exc)) from exc
        x = a + span * _HYPOTHESIS_PROBE
        tail = integrate(self.w, 1.0, (x, b), cfg)
        if not (0 < tail < math.inf):
            raise HypothesisViolationError(
                f"∫_x^b w = {tail} em x = {format_number(x)}; exige 0 < ∫_x^b w < inf"
            )

    def scaled(self, lam: float = 1.0, mu: float = 1.0, nu: float = 1.0) -> CanonicalProblem:
        """Problema com pesos (λw, μu, νv)."""
        return CanonicalProblem(
            self.p,
            self.q,
            self.r,
            simplify(mu * self.u),
            simplify(nu * self.v),
            simplify(lam * self.w),
            self.interval,
            check=self.check,
        )

    def summary(self) -> dict[str, str]:
        return {
            "p": format_exponent(self.p),
            "q": format_exponent(self.q),
            "r": format_exponent(self.r),
            "u": str(self.u),
            "v": str(self.v),
            "w": str(self.w),
            "interval": str(self.interval),
        }
