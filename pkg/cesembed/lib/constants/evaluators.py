"""Avaliadores das constantes C1–C7 da desigualdade canônica.

Supremos usam :func:`sup_search` (grade log-uniforme + seção áurea) e
integrais usam a regra graduada de :func:`integrate_graded`, ambas
vetorizadas sobre todos os pontos do nível externo. Divergência só é
testada nas extremidades fixas a e b: as extremidades móveis (x, y) ficam
no interior, onde as funções envolvidas são localmente limitadas.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from cesembed.lib.config import NumericsConfig
from cesembed.lib.constants.exceptions import ConstantsError, RegimeMisuseError
from cesembed.lib.constants.kernels import Kernels
from cesembed.lib.numerics import integrate_graded, sup_search
from cesembed.lib.reduce import CanonicalProblem
from cesembed.lib.weights import ExtReal, ext_div, ext_mul, ext_pow, to_float

logger = logging.getLogger(__name__)

ConstantFn = Callable[[CanonicalProblem, NumericsConfig | None], ExtReal]

# pontos por chamada quando cada ponto carrega uma integral interna
_NESTED_BUDGET = 1 << 12


def _require(name: str, ok: bool, condition: str, c: CanonicalProblem) -> None:
    if not ok:
        raise RegimeMisuseError(
            f"{name} exige {condition}; recebido p={c.p} q={c.q} r={c.r}"
        )


def _done(name: str, value: np.ndarray | float) -> ExtReal:
    out = to_float(np.max(value))
    logger.debug("evaluate_constant: %s = %s", name, out)
    return out


def _left_mass(k: Kernels, x: np.ndarray) -> np.ndarray:
    """∫_a^x W(t)^{−p/(p−r)} w(t) V_r(t, x)^{pr/(p−r)} dt para cada x."""
    p, r = k.p, k.r
    d = p - r
    x_e = np.asarray(x)[..., None, None]

    def integrand(t: np.ndarray) -> np.ndarray:
        head = ext_mul(ext_pow(k.W(t), -p / d), k.w_at(t))
        return ext_mul(head, ext_pow(k.V(t, x_e), p * r / d))

    return integrate_graded(integrand, k.a, x, k.cfg, bisect=False, detect_divergence="lo")


# -----------------------------------------------------------------------------
# C1–C3: supremos em x
# -----------------------------------------------------------------------------
def eval_C1(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """sup_x W(x)^{−1/p} · sup_{t∈(x,b)} U(t)^{1/q} V_r(x, t)."""
    k = Kernels(c, cfg)

    def outer(x: np.ndarray, rows: np.ndarray) -> np.ndarray:
        xs = x.ravel()

        def inner(t: np.ndarray, inner_rows: np.ndarray) -> np.ndarray:
            return ext_mul(ext_pow(k.U(t), 1.0 / k.q), k.V(xs[inner_rows][:, None], t))

        best = sup_search(inner, xs, k.b, k.cfg, detect_divergence="hi")
        return ext_mul(ext_pow(k.W(x), -1.0 / k.p), best.reshape(x.shape))

    return _done("C1", sup_search(outer, k.a, k.b, k.cfg, detect_divergence=True))


def eval_C2(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """sup_x W(x)^{−1/p} (∫_x^b U^{q/(1−q)} u V_r(x, ·)^{q/(1−q)})^{(1−q)/q}."""
    k = Kernels(c, cfg)
    _require("C2", k.q < 1, "q < 1", c)
    s = k.q / (1.0 - k.q)

    def outer(x: np.ndarray, rows: np.ndarray) -> np.ndarray:
        x_e = x[..., None, None]

        def integrand(t: np.ndarray) -> np.ndarray:
            head = ext_mul(ext_pow(k.U(t), s), k.u_at(t))
            return ext_mul(head, ext_pow(k.V(x_e, t), s))

        inner = integrate_graded(
            integrand, x, k.b, k.cfg, bisect=False, detect_divergence="hi"
        )
        return ext_mul(ext_pow(k.W(x), -1.0 / k.p), ext_pow(inner, 1.0 / s))

    value = sup_search(
        outer, k.a, k.b, k.cfg, budget=_NESTED_BUDGET, detect_divergence=True
    )
    return _done("C2", value)


def eval_C3(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """sup_x U(x)^{1/q} (∫_a^x W^{−p/(p−r)} w V_r(·, x)^{pr/(p−r)})^{(p−r)/(pr)}."""
    k = Kernels(c, cfg)
    _require("C3", k.r < k.p, "r < p", c)
    e = (k.p - k.r) / (k.p * k.r)

    def outer(x: np.ndarray, rows: np.ndarray) -> np.ndarray:
        return ext_mul(ext_pow(k.U(x), 1.0 / k.q), ext_pow(_left_mass(k, x), e))

    value = sup_search(
        outer, k.a, k.b, k.cfg, budget=_NESTED_BUDGET, detect_divergence=True
    )
    return _done("C3", value)


# -----------------------------------------------------------------------------
# C4–C7: integrais em x de supremos internos
# -----------------------------------------------------------------------------
def _outer_integral(k: Kernels, integrand: Callable[[np.ndarray], np.ndarray]) -> ExtReal:
    total = integrate_graded(integrand, k.a, k.b, k.cfg, bisect=False)
    return to_float(ext_pow(total, (k.p - k.q) / (k.p * k.q)))


def eval_C4(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """(∫ U^{q/(p−q)} u · ess sup_{t∈(a,x)} W(t)^{−q/(p−q)} V_r(t, x)^{pq/(p−q)} dx)^{(p−q)/(pq)}."""
    k = Kernels(c, cfg)
    _require("C4", k.q < k.p, "q < p", c)
    p, q = k.p, k.q
    d = p - q

    def integrand(x: np.ndarray) -> np.ndarray:
        xs = x.ravel()

        def inner(t: np.ndarray, rows: np.ndarray) -> np.ndarray:
            return ext_mul(
                ext_pow(k.W(t), -q / d), ext_pow(k.V(t, xs[rows][:, None]), p * q / d)
            )

        best = sup_search(inner, k.a, xs, k.cfg, detect_divergence="lo").reshape(x.shape)
        return ext_mul(ext_mul(ext_pow(k.U(x), q / d), k.u_at(x)), best)

    return _done("C4", _outer_integral(k, integrand))


def eval_C5(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """(∫ w(x) sup_{y<x} W(y)^{−p/(p−q)} (∫_y^x (∫_t^x u)^{q/(1−q)} u V_r(y, ·)^{q/(1−q)})^{p(1−q)/(p−q)} dx)^{(p−q)/(pq)}.

    A cauda interna de u vai até o x móvel, não até b.
    """
    k = Kernels(c, cfg)
    _require("C5", k.q < 1 and k.q < k.p, "q < 1 e q < p", c)
    p, q = k.p, k.q
    d = p - q
    s = q / (1.0 - q)

    def integrand(x: np.ndarray) -> np.ndarray:
        xs = x.ravel()

        def middle(y: np.ndarray, rows: np.ndarray) -> np.ndarray:
            y_e = y[..., None, None]
            x_e = xs[rows][:, None, None, None]

            def innermost(t: np.ndarray) -> np.ndarray:
                head = ext_mul(ext_pow(k.u_between(t, x_e), s), k.u_at(t))
                return ext_mul(head, ext_pow(k.V(y_e, t), s))

            mass = integrate_graded(
                innermost, y, xs[rows][:, None], k.cfg, bisect=False, detect_divergence=False
            )
            return ext_mul(ext_pow(k.W(y), -p / d), ext_pow(mass, p * (1.0 - q) / d))

        best = sup_search(
            middle,
            k.a,
            xs,
            k.cfg,
            grid=k.cfg.nested_sup_grid,
            budget=_NESTED_BUDGET,
            detect_divergence="lo",
        )
        return ext_mul(k.w_at(x), best.reshape(x.shape))

    return _done("C5", _outer_integral(k, integrand))


def eval_C6(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """(∫ w(x) ess sup_{y<x} W(y)^{−1} (∫_y^x U^{q/(p−q)} u) (∫_a^y …)^{(p−r)q/((p−q)r)} dx)^{(p−q)/(pq)}.

    ∫_y^x U^{q/(p−q)} u = ((p−q)/p)·(U(y)^{p/(p−q)} − U(x)^{p/(p−q)}) em forma
    fechada; o último fator é a mesma integral de :func:`eval_C3` com x = y.
    """
    k = Kernels(c, cfg)
    _require("C6", k.r < k.p and k.q < k.p, "r < p e q < p", c)
    p, q, r = k.p, k.q, k.r
    d = p - q
    g = p / d
    e = (p - r) * q / (d * r)

    def integrand(x: np.ndarray) -> np.ndarray:
        xs = x.ravel()
        u_x = ext_pow(k.U(xs), g)

        def middle(y: np.ndarray, rows: np.ndarray) -> np.ndarray:
            drop = np.maximum(ext_pow(k.U(y), g) - u_x[rows][:, None], 0.0) / g
            head = ext_div(drop, k.W(y))
            return ext_mul(head, ext_pow(_left_mass(k, y), e))

        best = sup_search(
            middle,
            k.a,
            xs,
            k.cfg,
            grid=k.cfg.nested_sup_grid,
            budget=_NESTED_BUDGET,
            detect_divergence="lo",
        )
        return ext_mul(k.w_at(x), best.reshape(x.shape))

    return _done("C6", _outer_integral(k, integrand))


def eval_C7(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """(∫ w(x) ess sup_{y<x} W(y)^{−p/(p−q)} ess sup_{t∈(y,x)} (∫_t^x u)^{p/(p−q)} V_r(y, t)^{pq/(p−q)} dx)^{(p−q)/(pq)}."""
    k = Kernels(c, cfg)
    _require("C7", k.q >= 1 and k.q < k.p, "q >= 1 e q < p", c)
    p, q = k.p, k.q
    d = p - q
    n = k.cfg.nested_sup_grid

    def integrand(x: np.ndarray) -> np.ndarray:
        xs = x.ravel()

        def middle(y: np.ndarray, rows: np.ndarray) -> np.ndarray:
            ys = y.ravel()
            x_rep = np.repeat(xs[rows], y.shape[1])

            def inner(t: np.ndarray, inner_rows: np.ndarray) -> np.ndarray:
                tail = k.u_between(t, x_rep[inner_rows][:, None])
                return ext_mul(
                    ext_pow(tail, p / d),
                    ext_pow(k.V(ys[inner_rows][:, None], t), p * q / d),
                )

            best = sup_search(inner, ys, x_rep, k.cfg, grid=n)
            return ext_mul(ext_pow(k.W(y), -p / d), best.reshape(y.shape))

        best = sup_search(
            middle, k.a, xs, k.cfg, grid=n, budget=_NESTED_BUDGET, detect_divergence="lo"
        )
        return ext_mul(k.w_at(x), best.reshape(x.shape))

    return _done("C7", _outer_integral(k, integrand))


# -----------------------------------------------------------------------------
# Registro e cotas auxiliares
# -----------------------------------------------------------------------------
CONSTANT_REGISTRY: dict[str, ConstantFn] = {
    "C1": eval_C1,
    "C2": eval_C2,
    "C3": eval_C3,
    "C4": eval_C4,
    "C5": eval_C5,
    "C6": eval_C6,
    "C7": eval_C7,
}


def register_constant(name: str, fn: ConstantFn) -> None:
    if not name:
        raise ConstantsError("Nome da constante não pode ser vazio")
    if not callable(fn):
        raise ConstantsError(f"Avaliador de {name} deve ser chamável")
    CONSTANT_REGISTRY[name] = fn


def evaluate_constant(
    name: str, c: CanonicalProblem, cfg: NumericsConfig | None = None
) -> ExtReal:
    fn = CONSTANT_REGISTRY.get(name.strip().upper())
    if fn is None:
        raise ConstantsError(f"Constante não suportada: {name}")
    return fn(c, cfg)


def fubini_constant(c: CanonicalProblem, cfg: NumericsConfig | None = None) -> ExtReal:
    """Melhor constante exata para p = q = r = 1: ess sup_s v(s)·U(s)/W(s).

    Com os três expoentes iguais a 1 as integrais trocam de ordem e a
    desigualdade se torna ∫ f·v·U <= C ∫ f·W.
    """
    k = Kernels(c, cfg)
    _require("fubini_constant", (k.p, k.q, k.r) == (1.0, 1.0, 1.0), "p = q = r = 1", c)

    def ratio(s: np.ndarray, rows: np.ndarray) -> np.ndarray:
        with np.errstate(all="ignore"):
            v = np.nan_to_num(np.asarray(c.v(s), dtype=float), nan=0.0)
        return ext_div(ext_mul(v, k.U(s)), k.W(s))

    return _done("fubini", sup_search(ratio, k.a, k.b, k.cfg, detect_divergence=True))
