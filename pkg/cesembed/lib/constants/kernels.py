"""Funções auxiliares das constantes: caudas W, U e o funcional V_r."""

from __future__ import annotations

import numpy as np

from cesembed.lib.config import NumericsConfig, resolve_numerics
from cesembed.lib.reduce import CanonicalProblem
from cesembed.lib.weights import V_r_many, WeightExpr, integrate_many


def _values(weight: WeightExpr, t: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        out = np.asarray(weight(t), dtype=float)
    return np.nan_to_num(out, nan=0.0, posinf=np.inf)


class Kernels:
    """Avaliação vetorizada das peças comuns a C1–C7.

    W(x) = ∫_x^b w, U(t) = ∫_t^b u e V_r(x, t), todas em forma fechada
    para pesos potência.
    """

    def __init__(self, problem: CanonicalProblem, cfg: NumericsConfig | None = None) -> None:
        self.problem = problem
        self.cfg = resolve_numerics(cfg)
        self.p, self.q, self.r = problem.exponents
        self.a, self.b = problem.interval.bounds

    def W(self, x: np.ndarray) -> np.ndarray:
        return integrate_many(self.problem.w, 1.0, x, self.b, self.cfg)

    def U(self, t: np.ndarray) -> np.ndarray:
        return integrate_many(self.problem.u, 1.0, t, self.b, self.cfg)

    def u_between(self, t: np.ndarray, x: np.ndarray) -> np.ndarray:
        """∫_t^x u."""
        return integrate_many(self.problem.u, 1.0, t, x, self.cfg)

    def V(self, x: np.ndarray, t: np.ndarray) -> np.ndarray:
        return V_r_many(self.problem.v, self.r, x, t, self.cfg)

    def u_at(self, t: np.ndarray) -> np.ndarray:
        return _values(self.problem.u, t)

    def w_at(self, t: np.ndarray) -> np.ndarray:
        return _values(self.problem.w, t)
