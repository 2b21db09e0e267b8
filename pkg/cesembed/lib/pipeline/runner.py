"""Orquestração dos comandos: redução, constantes exatas e oráculo.

O fluxo de ``check`` segue a ordem detect_degenerate → tilde_transform (Cop
no alvo) → canonicalize → triviality_check → theorem_verdict →
estimate_best_constant. Problemas fora de Ces ↪ Ces caem no oráculo aplicado
ao problema original (ou à sua redução degenerada).
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from cesembed.lib.config import NumericsConfig
from cesembed.lib.constants import theorem_verdict
from cesembed.lib.funcspace import (
    Exponent,
    SpaceSpec,
    StepFunction,
    format_exponent,
    parse_spec,
    space_norm,
)
from cesembed.lib.oracle import (
    OracleConfig,
    OracleResult,
    estimate_best_constant,
    estimate_original_constant,
)
from cesembed.lib.pipeline.exceptions import PipelineError
from cesembed.lib.pipeline.models import (
    COMMANDS,
    EmbeddingReport,
    NormReport,
    Report,
    RunRequest,
)
from cesembed.lib.reduce import (
    CanonicalProblem,
    EmbeddingProblem,
    UnsupportedProblemError,
    canonicalize,
    degenerate_sides,
    detect_degenerate,
    multiplier_to_embedding,
    tilde_transform,
    triviality_check,
)
from cesembed.lib.weights import parse_weight

logger = logging.getLogger(__name__)

OUT_OF_SCOPE_NOTE = "theorem path: out of scope (cited literature)"

# pares (fonte, alvo) reescritos por tilde_transform antes da canonicalização
_TILDE_KINDS = {("cop", "cop"), ("ces", "cop")}


@dataclass(frozen=True)
class _Plan:
    problem: EmbeddingProblem
    reduced: EmbeddingProblem | None
    canonical: CanonicalProblem | None
    p1: Exponent | None
    notes: tuple[str, ...]

    @property
    def canonical_summary(self) -> dict[str, str] | None:
        if self.canonical is None:
            return None
        return {**self.canonical.summary(), "p1": format_exponent(self.p1)}


def _parse_side(text: str | None, flag: str) -> SpaceSpec:
    if not text:
        raise PipelineError(f"--{flag} é obrigatório")
    return parse_spec(text)


def _problem(req: RunRequest) -> EmbeddingProblem:
    return EmbeddingProblem(_parse_side(req.source, "source"), _parse_side(req.target, "target"))


def plan_problem(e: EmbeddingProblem) -> _Plan:
    """Aplica as reduções e decide se o caminho teórico está disponível.

    Raises:
        UnsupportedWeightError: tilde_transform sai da família fechada.
        UnsupportedProblemError: Ces ↪ Ces com expoente infinito.
        HypothesisViolationError: o peso w da forma canônica não satisfaz a hipótese.
    """
    notes: list[str] = []
    reduced = detect_degenerate(e)
    if reduced is not None:
        sides = ", ".join(degenerate_sides(e))
        notes.append(f"degenerate: {sides} with p = q reduced to L_p ({reduced})")
    working = e
    if e.kinds in _TILDE_KINDS:
        working = tilde_transform(e)
        notes.append(
            "tilde_transform: {}->{} rewritten as {}->{}".format(*e.kinds, *working.kinds)
        )
    if working.kinds != ("ces", "ces"):
        notes.append(OUT_OF_SCOPE_NOTE)
        logger.info("plan_problem: %s sem caminho teórico", e)
        return _Plan(e, reduced, None, None, tuple(notes))
    c, p1 = canonicalize(working)
    return _Plan(e, reduced, c, p1, tuple(notes))


def _oracle_finite(result: OracleResult) -> bool:
    return math.isfinite(result.best_ratio) and not result.diverging


# -----------------------------------------------------------------------------
# check / multiplier
# -----------------------------------------------------------------------------
def check_problem(
    e: EmbeddingProblem,
    oracle_cfg: OracleConfig | None = None,
    numerics: NumericsConfig | None = None,
    *,
    notes: tuple[str, ...] = (),
    with_oracle: bool = True,
) -> EmbeddingReport:
    """Veredito completo de um mergulho já montado."""
    plan = plan_problem(e)
    notes = (*notes, *plan.notes)
    c = plan.canonical
    if c is None:
        result = estimate_original_constant(plan.reduced or e, oracle_cfg, numerics)
        return EmbeddingReport(
            problem=str(e), oracle=result, finite=_oracle_finite(result), notes=notes
        )

    trivial = triviality_check(c)
    if trivial is not None:
        logger.info("check_problem: %s", trivial)
        result = estimate_best_constant(c, oracle_cfg, numerics) if with_oracle else None
        return EmbeddingReport(
            problem=str(e),
            canonical=plan.canonical_summary,
            oracle=result,
            finite=False,
            trivial=True,
            notes=(*notes, trivial),
        )

    theorem = theorem_verdict(c, numerics)
    result = estimate_best_constant(c, oracle_cfg, numerics) if with_oracle else None
    report = EmbeddingReport(
        problem=str(e),
        canonical=plan.canonical_summary,
        theorem=theorem,
        oracle=result,
        finite=theorem.finite,
        notes=notes,
    )
    logger.info(
        "check_problem: regime=%s estimate=%s agreement=%s",
        report.regime,
        report.estimate,
        report.agreement,
    )
    return report


def run_check(req: RunRequest) -> EmbeddingReport:
    return check_problem(_problem(req), req.oracle_cfg, req.numerics)


def run_multiplier(req: RunRequest) -> EmbeddingReport:
    """Norma do multiplicador g de source em target, como o mergulho source ↪ target_g."""
    if not req.g:
        raise PipelineError("--g é obrigatório")
    g = parse_weight(req.g)
    e = multiplier_to_embedding(_problem(req), g)
    return check_problem(e, req.oracle_cfg, req.numerics, notes=(f"multiplier: g = {g}",))


# -----------------------------------------------------------------------------
# constants / oracle / norm
# -----------------------------------------------------------------------------
def run_constants(req: RunRequest) -> EmbeddingReport:
    """Só o caminho teórico: constantes do regime, sem oráculo.

    Raises:
        UnsupportedProblemError: o problema não se reduz a Ces ↪ Ces.
    """
    e = _problem(req)
    if plan_problem(e).canonical is None:
        raise UnsupportedProblemError(f"{e}: {OUT_OF_SCOPE_NOTE}")
    return check_problem(e, req.oracle_cfg, req.numerics, with_oracle=False)


def run_oracle(req: RunRequest) -> EmbeddingReport:
    e = _problem(req)
    result = estimate_original_constant(e, req.oracle_cfg, req.numerics)
    return EmbeddingReport(problem=str(e), oracle=result, finite=_oracle_finite(result))


def run_norm(req: RunRequest) -> NormReport:
    """‖f‖ no espaço ``--space`` para a função-escada lida de ``--f``."""
    if not req.f_path:
        raise PipelineError("--f é obrigatório")
    spec = _parse_side(req.space, "space")
    try:
        text = Path(req.f_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PipelineError(f"Não foi possível ler {req.f_path}: {exc}") from exc
    f = StepFunction.from_json(text)
    return NormReport(space=str(spec), norm=space_norm(f, spec, req.numerics))


# -----------------------------------------------------------------------------
# Registro de comandos
# -----------------------------------------------------------------------------
Runner = Callable[[RunRequest], Report]

RUNNER_REGISTRY: dict[str, Runner] = {}


def register_runner(command: str, runner: Runner) -> None:
    RUNNER_REGISTRY[command] = runner


for _command, _runner in zip(
    COMMANDS, (run_check, run_constants, run_oracle, run_norm, run_multiplier)
):
    register_runner(_command, _runner)


def run(req: RunRequest) -> Report:
    try:
        runner = RUNNER_REGISTRY[req.command]
    except KeyError as exc:
        raise PipelineError(f"Comando desconhecido: {req.command}") from exc
    logger.debug("run: comando=%s seed=%d", req.command, req.seed)
    return runner(req)
