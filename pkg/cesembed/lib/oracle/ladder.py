"""Escada de domínios truncados e as grades de cada degrau."""

from __future__ import annotations

import math

import numpy as np
from scipy.special import expit, logit

from cesembed.lib.oracle.models import Domain, OracleConfig
from cesembed.lib.weights import Interval

# menor distância relativa a uma extremidade finita
_MIN_OFFSET = 1e-14


def derive_ladder(interval: Interval, cfg: OracleConfig) -> list[Domain]:
    """Domínios crescentes por inclusão que se aproximam de (a, b).

    Com b finito o k-ésimo degrau é (a + δ_k·L, b − δ_k·L), L = b − a e
    δ_k = rung_refinement^k. Com b = inf é (a + δ_k·s, a + base^k), s = max(1, |a|).
    """
    if cfg.truncation_ladder is not None:
        return list(cfg.truncation_ladder)
    a, b = interval.bounds
    ladder = []
    for k in range(1, cfg.ladder_rungs + 1):
        delta = max(cfg.rung_refinement**k, _MIN_OFFSET)
        if math.isinf(b):
            scale = max(1.0, abs(a))
            ladder.append((a + scale * delta, a + cfg.ladder_base**k))
        else:
            span = b - a
            ladder.append((a + span * delta, b - span * delta))
    return ladder


def rung_breaks(domain: Domain, interval: Interval, n: int) -> np.ndarray:
    """``n + 1`` quebras em ``domain``, geométricas rumo às extremidades de (a, b)."""
    lo, hi = domain
    a, b = interval.bounds
    if math.isinf(b):
        start = max(lo - a, _MIN_OFFSET * max(1.0, abs(a)))
        breaks = a + np.geomspace(start, hi - a, n + 1)
    else:
        span = b - a
        left = max((lo - a) / span, _MIN_OFFSET)
        right = max((b - hi) / span, _MIN_OFFSET)
        s = np.linspace(logit(left), -logit(right), n + 1)
        breaks = a + span * expit(s)
    breaks[0], breaks[-1] = lo, hi
    return breaks
