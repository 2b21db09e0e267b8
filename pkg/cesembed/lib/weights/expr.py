"""Expressões de peso em forma fechada.

Família suportada: potências (com origem e orientação), potência-log,
por partes, produto, múltiplo escalar e potência de uma expressão. Os pesos
podem ser combinados como os filtros do projeto: ``w1 * w2`` gera
:class:`Product`, ``c * w`` gera :class:`Scaled` e ``w ** e`` gera
:class:`PowerOf`.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from numbers import Real

import numpy as np

from cesembed.lib.weights.exceptions import WeightDomainError, WeightParameterError
from cesembed.lib.weights.models import Bounds, format_number

#: (gamma, beta): w ~ C·d^gamma·log(d)^beta perto do ponto
Order = tuple[float, float]

_LARGE = 1e15


# -----------------------------------------------------------------------------
# Monomial: forma normal coef·d^alpha·log(e+t)^beta
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Monomial:
    """Forma normal ``coef·d(t)^alpha·log(e+t)^beta``.

    ``d(t) = t − origin`` (ou ``origin − t`` quando ``reflected``). O fator
    logarítmico só aparece com origem 0 não refletida.
    """

    coef: float = 1.0
    alpha: float = 0.0
    origin: float = 0.0
    reflected: bool = False
    beta: float = 0.0

    @property
    def is_constant(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def distance(self, t: np.ndarray) -> np.ndarray:
        return (self.origin - t) if self.reflected else (t - self.origin)

    def __call__(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        with np.errstate(all="ignore"):
            val = self.coef * np.power(self.distance(t), self.alpha)
            if self.beta:
                val = val * np.power(np.log(np.e + t), self.beta)
        return val

    def times(self, other: Monomial) -> Monomial | None:
        if other.is_constant:
            return Monomial(
                self.coef * other.coef,
                self.alpha,
                self.origin,
                self.reflected,
                self.beta,
            )
        if self.is_constant:
            return other.times(self)
        if self.origin != other.origin or self.reflected != other.reflected:
            return None
        return Monomial(
            self.coef * other.coef,
            self.alpha + other.alpha,
            self.origin,
            self.reflected,
            self.beta + other.beta,
        )

    def power(self, e: float) -> Monomial:
        return Monomial(
            self.coef**e, self.alpha * e, self.origin, self.reflected, self.beta * e
        )

    def monotone(self) -> bool:
        return self.beta == 0 or self.alpha * self.beta >= 0

    def order_at(self, point: float) -> Order:
        if math.isinf(point):
            return (self.alpha, self.beta) if not self.reflected else (0.0, 0.0)
        if point == self.origin:
            return (self.alpha, 0.0)
        return (0.0, 0.0)

    def limit(self, t: np.ndarray) -> np.ndarray:
        """Valores com semântica de limite nos pontos singulares."""
        t = np.asarray(t, dtype=float)
        val = self(t)
        d = self.distance(t)
        at_origin = d == 0
        if self.alpha < 0:
            at_origin_val = np.inf
        elif self.alpha > 0:
            at_origin_val = 0.0
        else:
            with np.errstate(all="ignore"):
                at_origin_val = self.coef * np.power(np.log(np.e + t), self.beta)
        val = np.where(at_origin, at_origin_val, val)
        if not self.reflected:
            at_inf = np.isposinf(t)
            g, b = self.alpha, self.beta
            if g > 0 or (g == 0 and b > 0):
                inf_val = np.inf
            elif g < 0 or b < 0:
                inf_val = 0.0
            else:
                inf_val = self.coef
            val = np.where(at_inf, inf_val, val)
        return val

    def integral(self, e: float, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        """∫_lo^hi (coef·d^alpha)^e, exata (exige beta == 0)."""
        if self.beta != 0:
            raise WeightParameterError("Integral fechada exige beta == 0")
        lo = np.asarray(lo, dtype=float)
        hi = np.asarray(hi, dtype=float)
        if self.reflected:
            d1, d2 = self.origin - hi, self.origin - lo
        else:
            d1, d2 = lo - self.origin, hi - self.origin
        if self.alpha == 0:
            with np.errstate(invalid="ignore"):
                out = (self.coef**e) * (hi - lo)
            return np.where(hi > lo, out, 0.0)
        return (self.coef**e) * power_integral(self.alpha * e, d1, d2)


def power_integral(k: float, d1: np.ndarray, d2: np.ndarray) -> np.ndarray:
    """∫_{d1}^{d2} s^k ds para 0 <= d1 <= d2 <= inf, com +inf na divergência."""
    d1 = np.maximum(np.asarray(d1, dtype=float), 0.0)
    d2 = np.asarray(d2, dtype=float)
    with np.errstate(all="ignore"):
        if k == -1:
            out = np.log(d2) - np.log(d1)
        elif k < -1:
            m = k + 1.0
            out = (np.power(d1, m) - np.power(d2, m)) / (-m)
        else:
            m = k + 1.0
            out = (np.power(d2, m) - np.power(d1, m)) / m
    return np.where(d2 > d1, out, 0.0)


def integrable_near(order: Order | None, e: float, at_infinity: bool) -> bool | None:
    """Decide se w^e é integrável perto do ponto a partir da ordem local."""
    if order is None:
        return None
    gamma, beta = order[0] * e, order[1] * e
    if at_infinity:
        return gamma < -1 or (gamma == -1 and beta < -1)
    return gamma > -1


# -----------------------------------------------------------------------------
# WeightExpr: classe base
# -----------------------------------------------------------------------------
class WeightExpr(ABC):
    """Peso positivo e finito q.t.p. no seu domínio."""

    @abstractmethod
    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def domain(self) -> Bounds:
        raise NotImplementedError

    def monomial(self) -> Monomial | None:
        return None

    def special_points(self) -> frozenset[float]:
        """Pontos finitos onde o peso pode ser singular ou mudar de fórmula."""
        return frozenset()

    def order_at(self, point: float, side: int = 1) -> Order | None:  # pragma: no cover
        return None

    def limit(self, t: np.ndarray, side: int = 1) -> np.ndarray:
        """Limite lateral do peso em ``t`` (``side=+1`` pela direita)."""
        t = np.asarray(t, dtype=float)
        mono = self.monomial()
        if mono is not None:
            return mono.limit(t)
        out = np.empty(t.shape)
        for idx, point in np.ndenumerate(t):
            out[idx] = self._generic_limit(float(point), side)
        return out

    def _generic_limit(self, point: float, side: int) -> float:
        order = self.order_at(point, side)
        if order is not None:
            gamma, beta = order
            if math.isinf(point):
                if gamma > 0 or (gamma == 0 and beta > 0):
                    return math.inf
                if gamma < 0 or beta < 0:
                    return 0.0
            else:
                if gamma < 0:
                    return math.inf
                if gamma > 0:
                    return 0.0
        probe = _LARGE * max(1.0, abs(point)) if math.isinf(point) else point
        with np.errstate(all="ignore"):
            val = float(self(np.asarray(probe)))
        if math.isnan(val) and not math.isinf(point):
            nudge = point + side * 1e-12 * max(1.0, abs(point))
            with np.errstate(all="ignore"):
                val = float(self(np.asarray(nudge)))
        return val

    def monotone(self) -> bool:
        mono = self.monomial()
        return mono is not None and mono.monotone()

    def check_contains(self, lo: float, hi: float) -> None:
        d_lo, d_hi = self.domain()
        if lo < d_lo or hi > d_hi:
            raise WeightDomainError(
                f"Subintervalo ({format_number(lo)}, {format_number(hi)}) fora do "
                f"domínio ({format_number(d_lo)}, {format_number(d_hi)}) de {self}"
            )

    # --- Composição ------------------------------------------------------------
    def __mul__(self, other: WeightExpr | float) -> WeightExpr:
        if isinstance(other, WeightExpr):
            return Product(self, other)
        if isinstance(other, Real):
            return Scaled(float(other), self)
        return NotImplemented

    def __rmul__(self, other: float) -> WeightExpr:
        if isinstance(other, Real):
            return Scaled(float(other), self)
        return NotImplemented

    def __pow__(self, e: float) -> WeightExpr:
        return PowerOf(self, float(e))


def _float_field(obj: object, name: str) -> None:
    object.__setattr__(obj, name, float(getattr(obj, name)))


# -----------------------------------------------------------------------------
# Variantes concretas
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Power(WeightExpr):
    """(t − origin)^alpha, ou (origin − t)^alpha quando ``reflected``."""

    alpha: float
    origin: float = 0.0
    reflected: bool = False

    def __post_init__(self) -> None:
        _float_field(self, "alpha")
        _float_field(self, "origin")
        if not (math.isfinite(self.alpha) and math.isfinite(self.origin)):
            raise WeightParameterError("Power exige alpha e origem finitos")

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        return self.monomial()(np.asarray(t, dtype=float))

    def domain(self) -> Bounds:
        if self.reflected:
            return -math.inf, self.origin
        return self.origin, math.inf

    def monomial(self) -> Monomial:
        return Monomial(1.0, self.alpha, self.origin, self.reflected, 0.0)

    def special_points(self) -> frozenset[float]:
        return frozenset({self.origin}) if self.alpha != 0 else frozenset()

    def order_at(self, point: float, side: int = 1) -> Order:
        return self.monomial().order_at(point)

    def __str__(self) -> str:
        if self.reflected:
            return f"rpow:{format_number(self.alpha)}~{format_number(self.origin)}"
        if self.origin == 0:
            return f"pow:{format_number(self.alpha)}"
        return f"pow:{format_number(self.alpha)}~{format_number(self.origin)}"


@dataclass(frozen=True)
class PowerLog(WeightExpr):
    """t^alpha·(log(e + t))^beta em [0, inf)."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        _float_field(self, "alpha")
        _float_field(self, "beta")

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        return self.monomial()(np.asarray(t, dtype=float))

    def domain(self) -> Bounds:
        return 0.0, math.inf

    def monomial(self) -> Monomial:
        return Monomial(1.0, self.alpha, 0.0, False, self.beta)

    def special_points(self) -> frozenset[float]:
        return frozenset({0.0})

    def order_at(self, point: float, side: int = 1) -> Order:
        return self.monomial().order_at(point)

    def __str__(self) -> str:
        return f"powlog:{format_number(self.alpha)},{format_number(self.beta)}"


@dataclass(frozen=True)
class Scaled(WeightExpr):
    """c·inner com c > 0."""

    c: float
    inner: WeightExpr

    def __post_init__(self) -> None:
        _float_field(self, "c")
        if not (self.c > 0 and math.isfinite(self.c)):
            raise WeightParameterError(f"Escala deve ser positiva e finita: {self.c}")

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        return self.c * self.inner(t)

    def domain(self) -> Bounds:
        return self.inner.domain()

    def monomial(self) -> Monomial | None:
        mono = self.inner.monomial()
        if mono is None:
            return None
        return Monomial(
            self.c * mono.coef, mono.alpha, mono.origin, mono.reflected, mono.beta
        )

    def special_points(self) -> frozenset[float]:
        return self.inner.special_points()

    def order_at(self, point: float, side: int = 1) -> Order | None:
        return self.inner.order_at(point, side)

    def limit(self, t: np.ndarray, side: int = 1) -> np.ndarray:
        return self.c * self.inner.limit(t, side)

    def monotone(self) -> bool:
        return self.inner.monotone()

    def __str__(self) -> str:
        return f"scale:{format_number(self.c)}*{self.inner}"


@dataclass(frozen=True)
class PowerOf(WeightExpr):
    """inner^e."""

    inner: WeightExpr
    e: float

    def __post_init__(self) -> None:
        _float_field(self, "e")
        if not math.isfinite(self.e):
            raise WeightParameterError("Expoente de PowerOf deve ser finito")

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        with np.errstate(all="ignore"):
            return np.power(self.inner(t), self.e)

    def domain(self) -> Bounds:
        return self.inner.domain()

    def monomial(self) -> Monomial | None:
        mono = self.inner.monomial()
        return None if mono is None else mono.power(self.e)

    def special_points(self) -> frozenset[float]:
        return self.inner.special_points()

    def order_at(self, point: float, side: int = 1) -> Order | None:
        order = self.inner.order_at(point, side)
        if order is None:
            return None
        return order[0] * self.e, order[1] * self.e

    def limit(self, t: np.ndarray, side: int = 1) -> np.ndarray:
        with np.errstate(all="ignore"):
            return np.power(self.inner.limit(t, side), self.e)

    def monotone(self) -> bool:
        return self.inner.monotone()

    def __str__(self) -> str:
        return f"powof:{self.inner}^{format_number(self.e)}"


@dataclass(frozen=True)
class Product(WeightExpr):
    """left·right."""

    left: WeightExpr
    right: WeightExpr

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        lv = np.asarray(self.left(t), dtype=float)
        rv = np.asarray(self.right(t), dtype=float)
        with np.errstate(all="ignore"):
            return lv * rv

    def domain(self) -> Bounds:
        l_lo, l_hi = self.left.domain()
        r_lo, r_hi = self.right.domain()
        return max(l_lo, r_lo), min(l_hi, r_hi)

    def monomial(self) -> Monomial | None:
        lm, rm = self.left.monomial(), self.right.monomial()
        if lm is None or rm is None:
            return None
        return lm.times(rm)

    def special_points(self) -> frozenset[float]:
        return self.left.special_points() | self.right.special_points()

    def order_at(self, point: float, side: int = 1) -> Order | None:
        lo = self.left.order_at(point, side)
        ro = self.right.order_at(point, side)
        if lo is None or ro is None:
            return None
        return lo[0] + ro[0], lo[1] + ro[1]

    def limit(self, t: np.ndarray, side: int = 1) -> np.ndarray:
        if self.monomial() is not None:
            return self.monomial().limit(np.asarray(t, dtype=float))
        return super().limit(t, side)

    def __str__(self) -> str:
        return f"prod:{self.left};{self.right}"


Piece = tuple[float, float, WeightExpr]


@dataclass(frozen=True)
class Piecewise(WeightExpr):
    """Peso definido por partes; as peças ladrilham (x0, xn) sem sobreposição."""

    pieces: tuple[Piece, ...]

    def __post_init__(self) -> None:
        norm = tuple((float(x0), float(x1), w) for x0, x1, w in self.pieces)
        if not norm:
            raise WeightParameterError("Piecewise exige ao menos uma peça")
        for (x0, x1, w), nxt in zip(norm, (*norm[1:], None)):
            if not x0 < x1:
                raise WeightParameterError(f"Peça vazia: ({x0}, {x1})")
            if nxt is not None and nxt[0] != x1:
                raise WeightParameterError(
                    f"Peças devem ladrilhar o intervalo: {x1} != {nxt[0]}"
                )
            w.check_contains(x0, x1)
        object.__setattr__(self, "pieces", norm)

    @property
    def breaks(self) -> tuple[float, ...]:
        return (self.pieces[0][0], *(x1 for _, x1, _ in self.pieces))

    def __call__(self, t: np.ndarray | float) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.full(t.shape, np.nan)
        last = len(self.pieces) - 1
        for i, (x0, x1, w) in enumerate(self.pieces):
            mask = (t >= x0) & ((t < x1) | ((i == last) & (t <= x1)))
            if np.any(mask):
                out = np.where(mask, w(np.where(mask, t, 0.5 * (x0 + min(x1, x0 + 1)))), out)
        return out

    def domain(self) -> Bounds:
        return self.pieces[0][0], self.pieces[-1][1]

    def special_points(self) -> frozenset[float]:
        pts: set[float] = set()
        for x0, x1, w in self.pieces:
            pts.update({x0} if math.isinf(x1) else {x0, x1})
            pts.update(p for p in w.special_points() if x0 <= p <= x1)
        return frozenset(pts)

    def piece_at(self, point: float, side: int = 1) -> Piece:
        for x0, x1, w in self.pieces:
            if (side > 0 and x0 <= point < x1) or (side <= 0 and x0 < point <= x1):
                return x0, x1, w
        return self.pieces[-1] if point >= self.pieces[-1][1] else self.pieces[0]

    def order_at(self, point: float, side: int = 1) -> Order | None:
        if math.isinf(point):
            return self.pieces[-1][2].order_at(point, side)
        return self.piece_at(point, side)[2].order_at(point, side)

    def limit(self, t: np.ndarray, side: int = 1) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        out = np.empty(t.shape)
        for idx, point in np.ndenumerate(t):
            if math.isinf(point):
                w = self.pieces[-1][2]
            else:
                w = self.piece_at(float(point), side)[2]
            out[idx] = float(w.limit(np.asarray(point), side))
        return out

    def monotone(self) -> bool:
        return False

    def __str__(self) -> str:
        body = ",".join(
            f"({format_number(x0)},{format_number(x1)},{w})" for x0, x1, w in self.pieces
        )
        return f"pw:[{body}]"


# -----------------------------------------------------------------------------
# Simplificação (preserva valores)
# -----------------------------------------------------------------------------
def is_unit(w: WeightExpr) -> bool:
    return isinstance(w, Power) and w.alpha == 0


def _scaled(c: float, inner: WeightExpr) -> WeightExpr:
    if c == 1:
        return inner
    if isinstance(inner, Scaled):
        return _scaled(c * inner.c, inner.inner)
    return Scaled(c, inner)


def _power_of(inner: WeightExpr, e: float) -> WeightExpr:
    match inner:
        case _ if e == 1:
            return inner
        case Power(alpha=alpha, origin=origin, reflected=reflected):
            return Power(alpha * e, origin, reflected)
        case PowerLog(alpha=alpha, beta=beta):
            return PowerLog(alpha * e, beta * e)
        case Scaled(c=c, inner=sub):
            return _scaled(c**e, _power_of(sub, e))
        case PowerOf(inner=sub, e=e0):
            return _power_of(sub, e0 * e)
        case Product(left=left, right=right):
            return _product(_power_of(left, e), _power_of(right, e))
        case Piecewise(pieces=pieces):
            return Piecewise(tuple((x0, x1, _power_of(w, e)) for x0, x1, w in pieces))
        case _:
            return PowerOf(inner, e)


def _product(left: WeightExpr, right: WeightExpr) -> WeightExpr:
    if is_unit(left):
        return right
    if is_unit(right):
        return left
    if isinstance(left, Scaled):
        return _scaled(left.c, _product(left.inner, right))
    if isinstance(right, Scaled):
        return _scaled(right.c, _product(left, right.inner))
    if isinstance(left, Piecewise) and isinstance(right, Piecewise):
        if left.breaks == right.breaks:
            return Piecewise(
                tuple(
                    (x0, x1, _product(lw, rw))
                    for (x0, x1, lw), (_, _, rw) in zip(left.pieces, right.pieces)
                )
            )
        return Product(left, right)
    if isinstance(left, Piecewise):
        return Piecewise(tuple((x0, x1, _product(w, right)) for x0, x1, w in left.pieces))
    if isinstance(right, Piecewise):
        return Piecewise(tuple((x0, x1, _product(left, w)) for x0, x1, w in right.pieces))
    lm, rm = left.monomial(), right.monomial()
    if (
        isinstance(left, Power | PowerLog)
        and isinstance(right, Power | PowerLog)
        and lm is not None
        and rm is not None
    ):
        merged = lm.times(rm)
        if merged is not None:
            if merged.beta == 0:
                return Power(merged.alpha, merged.origin, merged.reflected)
            return PowerLog(merged.alpha, merged.beta)
    return Product(left, right)


def simplify(w: WeightExpr) -> WeightExpr:
    """Reescreve ``w`` numa forma equivalente mais curta.

    Funde produtos de potências com a mesma origem, agrupa escalares e
    potências aninhadas; o valor do peso é preservado.
    """
    match w:
        case Scaled(c=c, inner=inner):
            return _scaled(c, simplify(inner))
        case PowerOf(inner=inner, e=e):
            return _power_of(simplify(inner), e)
        case Product(left=left, right=right):
            return _product(simplify(left), simplify(right))
        case Piecewise(pieces=pieces):
            return Piecewise(tuple((x0, x1, simplify(e)) for x0, x1, e in pieces))
        case _:
            return w


def constant(c: float = 1.0) -> WeightExpr:
    """Peso constante ``c`` em [0, inf)."""
    return _scaled(float(c), Power(0.0))
