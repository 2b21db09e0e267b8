"""Pipeline dos comandos da linha de comando: requisição → relatório."""

from __future__ import annotations

from cesembed.lib.pipeline.exceptions import PipelineError
from cesembed.lib.pipeline.models import (
    COMMANDS,
    EXIT_ERROR,
    EXIT_FINITE,
    EXIT_INFINITE,
    EXIT_TRIVIAL,
    EmbeddingReport,
    NormReport,
    RunRequest,
)
from cesembed.lib.pipeline.report import emit_report
from cesembed.lib.pipeline.runner import (
    OUT_OF_SCOPE_NOTE,
    RUNNER_REGISTRY,
    check_problem,
    plan_problem,
    register_runner,
    run,
    run_check,
    run_constants,
    run_multiplier,
    run_norm,
    run_oracle,
)

__all__ = [
    "PipelineError",
    "RunRequest",
    "EmbeddingReport",
    "NormReport",
    "COMMANDS",
    "EXIT_FINITE",
    "EXIT_INFINITE",
    "EXIT_TRIVIAL",
    "EXIT_ERROR",
    "OUT_OF_SCOPE_NOTE",
    "RUNNER_REGISTRY",
    "register_runner",
    "plan_problem",
    "check_problem",
    "run",
    "run_check",
    "run_constants",
    "run_oracle",
    "run_norm",
    "run_multiplier",
    "emit_report",
]
