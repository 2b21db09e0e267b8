"""Leitura da forma textual de :class:`SpaceSpec`.

Gramática (espaços são ignorados)::

    spec := ('ces' | 'cop') ':' num ',' num ':' weight ',' weight '@(' num ',' num ')'
          | 'leb' ':' num ':' weight '@(' num ',' num ')'

Os pesos seguem a DSL de :mod:`cesembed.lib.weights.dsl`.
"""

from __future__ import annotations

import logging

from cesembed.lib.funcspace.exceptions import SpaceParseError
from cesembed.lib.funcspace.models import SPACE_KINDS, SpaceSpec, format_spec
from cesembed.lib.weights import Interval, Scanner, WeightError, WeightParseError, parse_expr

logger = logging.getLogger(__name__)

__all__ = ["parse_spec", "format_spec"]


def _interval(sc: Scanner) -> Interval:
    sc.expect("@(")
    a = sc.number()
    sc.expect(",")
    b = sc.number()
    sc.expect(")")
    return Interval(float(a), float(b))


def parse_spec(text: str, *, validate: bool = True) -> SpaceSpec:
    """Converte ``ces:p,q:u,v@(a,b)`` (ou ``leb:p:v@(a,b)``) em :class:`SpaceSpec`.

    Raises:
        SpaceParseError: texto malformado (com a posição do erro).
        SpaceSpecError: condição de quase-norma violada.
    """
    sc = Scanner(text)
    kind = next((k for k in SPACE_KINDS if sc.accept(f"{k}:")), None)
    if kind is None:
        raise SpaceParseError(f"Tipo de espaço esperado ({'|'.join(SPACE_KINDS)})", 0)
    try:
        p = sc.number()
        if kind == "leb":
            sc.expect(":")
            v = parse_expr(sc)
            interval = _interval(sc)
            u = None
            q = p
        else:
            sc.expect(",")
            q = sc.number()
            sc.expect(":")
            u = parse_expr(sc)
            sc.expect(",")
            v = parse_expr(sc)
            interval = _interval(sc)
        if not sc.at_end():
            raise WeightParseError("Texto excedente após a especificação", sc.pos)
    except WeightParseError as exc:
        raise SpaceParseError(exc.message, exc.position) from exc
    except WeightError as exc:
        raise SpaceParseError(str(exc), sc.pos) from exc

    logger.debug("parse_spec: %s -> kind=%s p=%s q=%s", text, kind, p, q)
    if kind == "leb":
        return SpaceSpec.lebesgue(p, v, interval, validate=validate)
    return SpaceSpec(kind, p, q, u, v, interval, validate=validate)
