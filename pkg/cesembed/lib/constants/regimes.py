"""Os sete regimes de expoentes da desigualdade canônica.

Cada regime fixa as constantes que decidem a validade da desigualdade e cuja
soma é equivalente à melhor constante. As igualdades nas fronteiras são
resolvidas exatamente: q = 1 cai nos ramos com q >= 1 e p = r nos ramos p <= r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from cesembed.lib.constants.exceptions import ConstantsError, RegimeError
from cesembed.lib.funcspace import Exponent, SpaceSpecError, as_exponent, is_finite_exponent

logger = logging.getLogger(__name__)

RegimeId = Literal["i", "ii", "iii", "iv", "v", "vi", "vii"]
ConstantId = Literal["C1", "C2", "C3", "C4", "C5", "C6", "C7"]


@dataclass(frozen=True)
class Regime:
    id: RegimeId
    required_constants: tuple[ConstantId, ...]

    def __str__(self) -> str:
        return f"{self.id}: {' + '.join(self.required_constants)}"


REGIME_REGISTRY: dict[str, Regime] = {
    "i": Regime("i", ("C1",)),
    "ii": Regime("ii", ("C2",)),
    "iii": Regime("iii", ("C1", "C3")),
    "iv": Regime("iv", ("C2", "C3")),
    "v": Regime("v", ("C4", "C5")),
    "vi": Regime("vi", ("C1", "C5", "C6")),
    "vii": Regime("vii", ("C1", "C6", "C7")),
}


def register_regime(regime: Regime) -> None:
    if not regime.required_constants:
        raise ConstantsError("Regime sem constantes")
    REGIME_REGISTRY[regime.id] = regime


def _admissible(name: str, value: Exponent | float) -> Exponent:
    try:
        out = as_exponent(value)
    except SpaceSpecError as exc:
        raise RegimeError(f"{name} inválido: {value!r}") from exc
    if not is_finite_exponent(out):
        raise RegimeError(f"{name} deve ser finito: {value!r}")
    return out


def _regime_id(p: Exponent, q: Exponent, r: Exponent) -> RegimeId:
    one = Fraction(1)
    if q >= one:
        if p <= r:
            return "i"
        if p <= q:
            return "iii"
        return "vii"
    if p <= min(q, r):
        return "ii"
    if r < p <= q:
        return "iv"
    if q < p <= r:
        return "v"
    return "vi"


def classify_regime(p: Exponent | float, q: Exponent | float, r: Exponent | float) -> Regime:
    """Regime único de (p, q, r) com 0 < r <= 1 e 0 < p, q < inf.

    Raises:
        RegimeError: r > 1 (caso trivial) ou expoente não positivo/infinito.
    """
    p_, q_, r_ = (_admissible(n, x) for n, x in (("p", p), ("q", q), ("r", r)))
    if r_ > 1:
        raise RegimeError(f"r = {r} > 1: a desigualdade é trivial, use triviality_check")
    regime = REGIME_REGISTRY[_regime_id(p_, q_, r_)]
    logger.debug("classify_regime: p=%s q=%s r=%s -> %s", p_, q_, r_, regime.id)
    return regime
