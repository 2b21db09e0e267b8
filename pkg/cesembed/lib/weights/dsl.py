"""DSL textual de pesos.

Gramática (espaços são ignorados)::

    expr  := 'pow:' num ['~' num]        (t − origem)^alpha
           | 'rpow:' num '~' num          (origem − t)^alpha
           | 'powlog:' num ',' num
           | 'scale:' num '*' expr
           | 'prod:' expr ';' expr
           | 'powof:' expr '^' num
           | 'pw:[' piece (',' piece)* ']'
    piece := '(' num ',' num ',' expr ')'
    num   := racional ('3/2'), decimal ('0.5', '1e-3') ou 'inf'
"""

from __future__ import annotations

import re
from collections.abc import Callable
from fractions import Fraction

from cesembed.lib.weights.exceptions import WeightError, WeightParseError
from cesembed.lib.weights.expr import (
    Piecewise,
    Power,
    PowerLog,
    PowerOf,
    Product,
    Scaled,
    WeightExpr,
)

_NUMBER = re.compile(
    r"[+-]?(?:inf|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)"
)


class Scanner:
    """Cursor simples sobre o texto já sem espaços."""

    def __init__(self, text: str) -> None:
        self.text = "".join(text.split())
        self.pos = 0

    def peek(self, token: str) -> bool:
        return self.text.startswith(token, self.pos)

    def accept(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            found = self.text[self.pos : self.pos + 8] or "<fim>"
            raise WeightParseError(f"Esperado '{token}', encontrado '{found}'", self.pos)

    def number(self) -> Fraction | float:
        match = _NUMBER.match(self.text, self.pos)
        if match is None:
            raise WeightParseError("Número esperado", self.pos)
        self.pos = match.end()
        raw = match.group(0)
        if raw.lstrip("+-") == "inf":
            return float("-inf") if raw.startswith("-") else float("inf")
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise WeightParseError(f"Número inválido '{raw}'", match.start()) from exc

    def at_end(self) -> bool:
        return self.pos >= len(self.text)


def _parse_pow(sc: Scanner) -> WeightExpr:
    alpha = sc.number()
    origin = sc.number() if sc.accept("~") else 0
    return Power(float(alpha), float(origin))


def _parse_rpow(sc: Scanner) -> WeightExpr:
    alpha = sc.number()
    sc.expect("~")
    return Power(float(alpha), float(sc.number()), reflected=True)


def _parse_powlog(sc: Scanner) -> WeightExpr:
    alpha = sc.number()
    sc.expect(",")
    return PowerLog(float(alpha), float(sc.number()))


def _parse_scale(sc: Scanner) -> WeightExpr:
    c = sc.number()
    sc.expect("*")
    return Scaled(float(c), parse_expr(sc))


def _parse_prod(sc: Scanner) -> WeightExpr:
    left = parse_expr(sc)
    sc.expect(";")
    return Product(left, parse_expr(sc))


def _parse_powof(sc: Scanner) -> WeightExpr:
    inner = parse_expr(sc)
    sc.expect("^")
    return PowerOf(inner, float(sc.number()))


def _parse_pw(sc: Scanner) -> WeightExpr:
    sc.expect("[")
    pieces = []
    while True:
        sc.expect("(")
        x0 = sc.number()
        sc.expect(",")
        x1 = sc.number()
        sc.expect(",")
        expr = parse_expr(sc)
        sc.expect(")")
        pieces.append((float(x0), float(x1), expr))
        if not sc.accept(","):
            break
    sc.expect("]")
    return Piecewise(tuple(pieces))


#: tag da DSL -> construtor
WEIGHT_REGISTRY: dict[str, Callable[[Scanner], WeightExpr]] = {
    "powlog": _parse_powlog,
    "powof": _parse_powof,
    "pow": _parse_pow,
    "rpow": _parse_rpow,
    "scale": _parse_scale,
    "prod": _parse_prod,
    "pw": _parse_pw,
}


def register_weight(tag: str, parser: Callable[[Scanner], WeightExpr]) -> None:
    if not tag or not tag.isalpha():
        raise WeightParseError(f"Tag inválida: '{tag}'", 0)
    WEIGHT_REGISTRY[tag] = parser


def parse_expr(sc: Scanner) -> WeightExpr:
    start = sc.pos
    # tags mais longas primeiro ("powlog" antes de "pow")
    for tag in sorted(WEIGHT_REGISTRY, key=len, reverse=True):
        if sc.accept(f"{tag}:"):
            try:
                return WEIGHT_REGISTRY[tag](sc)
            except WeightParseError:
                raise
            except WeightError as exc:
                raise WeightParseError(str(exc), start) from exc
    found = sc.text[start : start + 8] or "<fim>"
    raise WeightParseError(f"Peso desconhecido '{found}'", start)


def parse_weight(text: str) -> WeightExpr:
    """Converte o texto da DSL em :class:`WeightExpr`.

    Raises:
        WeightParseError: texto malformado (com a posição do erro).
    """
    sc = Scanner(text)
    expr = parse_expr(sc)
    if not sc.at_end():
        raise WeightParseError("Texto excedente após o peso", sc.pos)
    return expr


def format_weight(w: WeightExpr) -> str:
    return str(w)
