#!/usr/bin/env python3
"""Compare per-package coverage and Ruff findings against the stored baselines.

Each ``cesembed.lib`` subpackage listed in the baseline file has its own coverage floor.
"""

from __future__ import annotations

import argparse
import json
import sys
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import yaml

# coverage.py rounding slack
EPSILON = 1e-6


@dataclass(frozen=True)
class CoverageReport:
    total: float
    packages: dict[str, float] = field(default_factory=dict)

    def package(self, name: str) -> float | None:
        """Percentage of the package whose dotted name ends with ``name``."""
        for full, percent in self.packages.items():
            if full == name or full.endswith(f".{name}"):
                return percent
        return None


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description=(
            "Verify that each cesembed.lib subpackage keeps its coverage floor and that "
            "Ruff findings stay within the allowed counts."
        )
    )
    parser.add_argument(
        "--baseline", type=Path, required=True, help="YAML file with the baselines."
    )
    parser.add_argument(
        "--coverage", type=Path, required=True, help="Coverage XML from pytest-cov."
    )
    parser.add_argument(
        "--ruff", type=Path, required=True, help="Ruff report written with --output-format json."
    )
    return parser.parse_args(argv)


def load_baselines(path: Path) -> dict:
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except FileNotFoundError as exc:
        raise SystemExit(f"Baseline file not found: {path}") from exc
    if not isinstance(data, dict):
        raise SystemExit("Baseline file must define a mapping of metrics.")
    coverage = data.get("coverage")
    if not isinstance(coverage, dict) or not isinstance(coverage.get("packages"), dict):
        raise SystemExit("Baseline file must list coverage floors under coverage.packages.")
    if "violation_count" not in data.get("ruff", {}):
        raise SystemExit("Baseline file is missing the Ruff violation count.")
    return data


def read_coverage(coverage_path: Path) -> CoverageReport:
    try:
        root = ET.parse(coverage_path).getroot()
    except FileNotFoundError as exc:
        raise SystemExit(f"Coverage report not found: {coverage_path}") from exc
    except ET.ParseError as exc:
        raise SystemExit(f"Coverage report is not valid XML: {coverage_path}") from exc

    line_rate = root.attrib.get("line-rate")
    if line_rate is None:
        raise SystemExit("Coverage report is missing the line-rate attribute.")
    packages = {
        pkg.attrib["name"]: float(pkg.attrib.get("line-rate", 0.0)) * 100.0
        for pkg in root.iter("package")
        if "name" in pkg.attrib
    }
    return CoverageReport(total=float(line_rate) * 100.0, packages=packages)


def read_ruff_codes(report_path: Path) -> Counter[str]:
    try:
        with report_path.open("r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError as exc:
        raise SystemExit(f"Ruff report not found: {report_path}") from exc
    except json.JSONDecodeError as exc:
        raise SystemExit(f"Ruff report is not valid JSON: {report_path}") from exc

    if not isinstance(payload, list):
        raise SystemExit("Unexpected Ruff report format: expected a list of violations.")
    return Counter(str(item.get("code") or "?") for item in payload if isinstance(item, dict))


def compare(baselines: dict, coverage: CoverageReport, codes: Counter[str]) -> list[str]:
    """Return the failed checks; empty when every threshold holds."""
    failures: list[str] = []
    floors = baselines["coverage"]
    total_floor = floors.get("total")
    if total_floor is not None and coverage.total + EPSILON < float(total_floor):
        failures.append(
            f"Coverage decreased: expected at least {float(total_floor):.2f}% overall, "
            f"but measured {coverage.total:.2f}%."
        )
    for name, floor in sorted(floors["packages"].items()):
        measured = coverage.package(name)
        if measured is None:
            failures.append(f"Coverage report has no data for cesembed.lib.{name}.")
        elif measured + EPSILON < float(floor):
            failures.append(
                f"Coverage decreased: expected at least {float(floor):.2f}% for "
                f"cesembed.lib.{name}, but measured {measured:.2f}%."
            )

    ruff = baselines["ruff"]
    allowed = int(ruff["violation_count"])
    actual = sum(codes.values())
    if actual > allowed:
        failures.append(
            f"Ruff violations increased: expected at most {allowed} issues, but detected {actual}."
        )
    for code, cap in sorted((ruff.get("per_rule") or {}).items()):
        if codes.get(code, 0) > int(cap):
            failures.append(
                f"Ruff rule {code} exceeded its cap: allowed {int(cap)}, detected {codes[code]}."
            )
    return failures


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    baselines = load_baselines(args.baseline)
    coverage = read_coverage(args.coverage)
    codes = read_ruff_codes(args.ruff)

    lines = [f"  overall: {coverage.total:.2f}%"]
    for name, floor in sorted(baselines["coverage"]["packages"].items()):
        measured = coverage.package(name)
        shown = "missing" if measured is None else f"{measured:.2f}%"
        lines.append(f"  cesembed.lib.{name}: {shown} (floor {float(floor):.2f}%)")
    breakdown = ", ".join(f"{code}={n}" for code, n in sorted(codes.items())) or "none"
    print(
        "Quality gate comparison:\n"
        + "\n".join(lines)
        + f"\n  Ruff violations: {sum(codes.values())} "
        f"(allowed {int(baselines['ruff']['violation_count'])}; {breakdown})"
    )

    failures = compare(baselines, coverage, codes)
    if failures:
        for failure in failures:
            print(f"::error::{failure}")
        return 1

    print("Quality gates satisfied: package coverage and Ruff thresholds met.")
    return 0


if __name__ == "__main__":
    sys.exit(main())
