"""Modelos do pacote funcspace: funções-escada e especificações de espaço."""

from __future__ import annotations

import json
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

import numpy as np

from cesembed.lib.config import NumericsConfig
from cesembed.lib.funcspace.exceptions import SpaceSpecError, StepFunctionError
from cesembed.lib.weights import (
    Interval,
    Power,
    WeightDomainError,
    WeightExpr,
    constant,
    ess_sup,
    format_number,
    integrate,
)

SpaceKind = Literal["ces", "cop", "leb"]
Exponent = Fraction | float

SPACE_KINDS: tuple[SpaceKind, ...] = ("ces", "cop", "leb")

# distância relativa ao extremo a usada na checagem da quase-norma
_QUASI_NORM_PROBE = 1e-6


def as_exponent(value: Any) -> Exponent:
    """Normaliza um expoente: racional exato quando finito, ``inf`` caso contrário."""
    if isinstance(value, Fraction):
        out: Exponent = value
    elif isinstance(value, float) and math.isinf(value):
        out = value
    elif isinstance(value, str) and value.strip().lower() == "inf":
        out = math.inf
    else:
        try:
            out = Fraction(value) if not isinstance(value, float) else Fraction(repr(value))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpaceSpecError(f"Expoente inválido: {value!r}") from exc
    if not out > 0:
        raise SpaceSpecError(f"Expoente deve ser positivo: {value!r}")
    return out


def format_exponent(value: Exponent) -> str:
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


def is_finite_exponent(value: Exponent) -> bool:
    return not (isinstance(value, float) and math.isinf(value))


# -----------------------------------------------------------------------------
# StepFunction
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class StepFunction:
    """Função-escada não negativa: ``values[i]`` em (breaks[i], breaks[i+1]).

    Fora de [breaks[0], breaks[-1]] a função vale zero.
    """

    breaks: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        breaks = tuple(float(x) for x in self.breaks)
        values = tuple(float(v) for v in self.values)
        if len(breaks) < 2:
            raise StepFunctionError("Função-escada exige ao menos duas quebras")
        if len(values) != len(breaks) - 1:
            raise StepFunctionError(
                f"Esperados {len(breaks) - 1} valores, recebidos {len(values)}"
            )
        if not all(math.isfinite(x) for x in breaks):
            raise StepFunctionError("Quebras devem ser finitas")
        if any(x1 <= x0 for x0, x1 in zip(breaks[:-1], breaks[1:])):
            raise StepFunctionError("Quebras devem ser estritamente crescentes")
        if any(not (math.isfinite(v) and v >= 0) for v in values):
            raise StepFunctionError("Valores devem ser finitos e não negativos")
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, value: float, a: float, b: float) -> StepFunction:
        return cls((a, b), (value,))

    @classmethod
    def from_arrays(cls, breaks: Sequence[float], values: Sequence[float]) -> StepFunction:
        return cls(tuple(np.asarray(breaks, dtype=float)), tuple(np.asarray(values, dtype=float)))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> StepFunction:
        try:
            return cls(tuple(data["breaks"]), tuple(data["values"]))
        except (KeyError, TypeError) as exc:
            raise StepFunctionError(
                "JSON de função-escada exige as chaves 'breaks' e 'values'"
            ) from exc

    @classmethod
    def from_json(cls, text: str) -> StepFunction:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise StepFunctionError(f"JSON inválido: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise StepFunctionError("JSON de função-escada deve ser um objeto")
        return cls.from_dict(data)

    def to_dict(self) -> dict[str, list[float]]:
        return {"breaks": list(self.breaks), "values": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # --- Consultas -------------------------------------------------------------
    @property
    def n_cells(self) -> int:
        return len(self.values)

    @property
    def support(self) -> tuple[float, float]:
        return self.breaks[0], self.breaks[-1]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def cells(self) -> Iterator[tuple[float, float, float]]:
        yield from zip(self.breaks[:-1], self.breaks[1:], self.values)

    def clipped(self, lo: float, hi: float) -> Iterator[tuple[float, float, float]]:
        """Células restritas a (lo, hi), descartando as vazias."""
        for x0, x1, val in self.cells():
            c0, c1 = max(x0, lo), min(x1, hi)
            if c0 < c1:
                yield c0, c1, val

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        idx = np.searchsorted(self.breaks, t, side="right") - 1
        inside = (idx >= 0) & (idx < self.n_cells)
        vals = np.asarray(self.values)[np.clip(idx, 0, self.n_cells - 1)]
        return np.where(inside, vals, 0.0)

    # --- Construtores derivados ---------------------------------------------------
    def scaled(self, factor: float) -> StepFunction:
        return StepFunction(self.breaks, tuple(factor * v for v in self.values))

    def power(self, e: float) -> StepFunction:
        return StepFunction(self.breaks, tuple(v**e if v else 0.0 for v in self.values))

    def refined(self) -> StepFunction:
        """Divide cada célula ao meio sem alterar a função."""
        mids = [0.5 * (x0 + x1) for x0, x1 in zip(self.breaks[:-1], self.breaks[1:])]
        breaks = [x for pair in zip(self.breaks[:-1], mids) for x in pair]
        values = [v for v in self.values for _ in range(2)]
        return StepFunction((*breaks, self.breaks[-1]), tuple(values))

    def reflected(self, a: float, b: float) -> StepFunction:
        """t ↦ f(a + b − t)."""
        breaks = tuple(a + b - x for x in reversed(self.breaks))
        return StepFunction(breaks, tuple(reversed(self.values)))

    def inverted(self, a: float) -> StepFunction:
        """t ↦ f(a + 1/(t − a)); exige suporte afastado de a."""
        if self.breaks[0] <= a:
            raise StepFunctionError("Inversão exige suporte estritamente à direita de a")
        breaks = tuple(a + 1.0 / (x - a) for x in reversed(self.breaks))
        return StepFunction(breaks, tuple(reversed(self.values)))


# -----------------------------------------------------------------------------
# SpaceSpec
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class SpaceSpec:
    """Um lado de um mergulho: Ces_{p,q}(u, v), Cop_{p,q}(u, v) ou L_p(v).

    Attributes:
        kind: ``"ces"``, ``"cop"`` ou ``"leb"``.
        p: expoente interno (racional ou ``inf``).
        q: expoente externo; em ``leb`` é igual a ``p``.
        u: peso externo (ignorado em ``leb``).
        v: peso interno.
        interval: intervalo (a, b).
        validate: checa a condição de quase-norma na construção.
    """

    kind: SpaceKind
    p: Exponent
    q: Exponent
    u: WeightExpr
    v: WeightExpr
    interval: Interval
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.kind not in SPACE_KINDS:
            raise SpaceSpecError(f"Tipo de espaço desconhecido: {self.kind!r}")
        object.__setattr__(self, "p", as_exponent(self.p))
        object.__setattr__(self, "q", as_exponent(self.q))
        if self.kind == "leb":
            object.__setattr__(self, "q", self.p)
        if self.validate:
            self.check_quasi_norm()

    @classmethod
    def lebesgue(cls, p: Any, v: WeightExpr, interval: Interval, **kw: Any) -> SpaceSpec:
        return cls("leb", p, p, constant(1.0), v, interval, **kw)

    @property
    def finite_exponents(self) -> bool:
        return is_finite_exponent(self.p) and is_finite_exponent(self.q)

    def with_weights(
        self, u: WeightExpr | None = None, v: WeightExpr | None = None
    ) -> SpaceSpec:
        return SpaceSpec(
            self.kind,
            self.p,
            self.q,
            self.u if u is None else u,
            self.v if v is None else v,
            self.interval,
            validate=self.validate,
        )

    def check_quasi_norm(self, cfg: NumericsConfig | None = None) -> None:
        """Checa 0 < ‖u‖_{q,(t,b)} < inf (Ces) ou 0 < ‖u‖_{q,(a,t)} < inf (Cop).

        A condição é testada perto do extremo em que a cauda pode divergir:
        em t próximo de a para Ces e próximo de b para Cop.

        Raises:
            SpaceSpecError: condição violada ou pesos fora do domínio.
        """
        a, b = self.interval.bounds
        try:
            self.v.check_contains(a, b)
            if self.kind == "leb":
                return
            self.u.check_contains(a, b)
        except WeightDomainError as exc:
            raise SpaceSpecError(str(exc)) from exc

        span = (1.0 if math.isinf(b) else b - a) * _QUASI_NORM_PROBE
        if self.kind == "ces":
            sub, endpoint = (a + span, b), f"b={format_number(b)}"
        else:
            far = a + 1.0 / _QUASI_NORM_PROBE if math.isinf(b) else b - span
            sub, endpoint = (a, far), f"a={format_number(a)}"
        if is_finite_exponent(self.q):
            raw = integrate(self.u, float(self.q), sub, cfg)
        else:
            raw = ess_sup(self.u, sub, cfg)
        if not (0 < raw < math.inf):
            raise SpaceSpecError(
                f"Condição de quase-norma violada para {self.kind} perto de "
                f"{endpoint}: ‖u‖ = {raw}"
            )

    def __str__(self) -> str:
        return format_spec(self)


def format_spec(spec: SpaceSpec) -> str:
    """Forma textual de :class:`SpaceSpec`, inversa de ``parse_spec``."""
    if spec.kind == "leb":
        return f"leb:{format_exponent(spec.p)}:{spec.v}@{spec.interval}"
    exps = f"{format_exponent(spec.p)},{format_exponent(spec.q)}"
    return f"{spec.kind}:{exps}:{spec.u},{spec.v}@{spec.interval}"


def classical_cesaro(p: Any, interval: Interval | None = None) -> SpaceSpec:
    """Ces(p) = Ces_{1,p}(x^{-1}, 1)."""
    return SpaceSpec("ces", 1, p, Power(-1.0), Power(0.0), interval or Interval(0, math.inf))


def classical_copson(p: Any, interval: Interval | None = None) -> SpaceSpec:
    """Cop(p) = Cop_{1,p}(1, x^{-1})."""
    return SpaceSpec("cop", 1, p, Power(0.0), Power(-1.0), interval or Interval(0, math.inf))
