"""Serialização dos relatórios em JSON ou texto."""

from __future__ import annotations

import json
import math

from cesembed.lib.pipeline.models import EmbeddingReport, OutputFormat, Report
from cesembed.lib.weights import format_ext


def _fmt(value: float | None) -> str:
    if value is None:
        return "-"
    if math.isinf(value):
        return "inf"
    return f"{value:.6g}"


def _embedding_lines(rep: EmbeddingReport) -> list[str]:
    lines = [f"problem: {rep.problem}", f"finite: {str(rep.finite).lower()}"]
    if rep.trivial:
        lines.append("verdict: trivial")
    if rep.canonical:
        c = rep.canonical
        lines.append(f"canonical: p={c['p']} q={c['q']} r={c['r']} (p1={c['p1']})")
    if rep.theorem is not None:
        lines.append(f"regime: {rep.regime}")
        lines.append("constants:")
        lines.extend(f"  {name} = {_fmt(v)}" for name, v in rep.theorem.values.items())
        lines.append(f"estimate: {_fmt(rep.estimate)}")
        offending = [n for n, v in rep.theorem.values.items() if math.isinf(v)]
        if offending:
            lines.append(f"infinite: {', '.join(offending)}")
    if rep.oracle is not None:
        lines.append(
            f"oracle: best_ratio={_fmt(rep.oracle.best_ratio)} "
            f"diverging={str(rep.oracle.diverging).lower()}"
        )
    if rep.agreement is not None:
        lines.append(f"agreement: {_fmt(rep.agreement)}")
    if rep.notes:
        lines.append("notes:")
        lines.extend(f"  - {note}" for note in rep.notes)
    return lines


def emit_report(rep: Report, fmt: OutputFormat = "json") -> str:
    """JSON com chaves ordenadas (infinito como ``"inf"``) ou texto legível."""
    if fmt == "json":
        return json.dumps(rep.to_dict(), indent=2, sort_keys=True)
    if isinstance(rep, EmbeddingReport):
        return "\n".join(_embedding_lines(rep))
    return "\n".join(
        [
            f"space: {rep.space}",
            f"norm: {format_ext(rep.norm)}",
            f"finite: {str(rep.finite).lower()}",
        ]
    )
