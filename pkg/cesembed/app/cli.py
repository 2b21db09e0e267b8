"""Linha de comando do cesembed.

Subcomandos ``check``, ``constants``, ``oracle``, ``norm`` e ``multiplier``.
Códigos de saída: 0 mergulho finito, 1 infinito, 2 trivial (r > 1), 3 erro.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import NoReturn

from cesembed import __version__
from cesembed.lib.config import DEFAULT_NUMERICS, ConfigError
from cesembed.lib.config.loader import load_config
from cesembed.lib.constants import ConstantsError
from cesembed.lib.funcspace import FuncSpaceError
from cesembed.lib.oracle import OracleConfig, OracleError
from cesembed.lib.pipeline import (
    COMMANDS,
    EXIT_ERROR,
    PipelineError,
    RunRequest,
    emit_report,
    run,
)
from cesembed.lib.reduce import ReductionError
from cesembed.lib.weights import WeightError

logger = logging.getLogger(__name__)

LIBRARY_ERRORS = (
    WeightError,
    FuncSpaceError,
    ReductionError,
    ConstantsError,
    OracleError,
    PipelineError,
    ConfigError,
)

_HELP = {
    "check": "Veredito completo: constantes do teorema e oráculo numérico",
    "constants": "Somente as constantes do regime (sem oráculo)",
    "oracle": "Somente o oráculo numérico sobre o problema original",
    "norm": "Quase-norma de uma função-escada em um espaço",
    "multiplier": "Norma do multiplicador g de source em target",
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: erro: {message}\n")


def _add_common(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--config", type=str, default=None, help="Arquivo YAML de configuração")
    cmd.add_argument("--format", choices=["json", "text"], default="json", dest="output")
    cmd.add_argument("--verbose", action="store_true")


def _add_oracle(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--seed", type=int, default=None)
    cmd.add_argument("--oracle-grid", type=int, default=None, dest="grid_size")
    cmd.add_argument("--restarts", type=int, default=None)
    cmd.add_argument("--ascent-iters", type=int, default=None, dest="ascent_iters")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="cesembed",
        description="Mergulhos entre espaços de Cesàro e Copson com pesos.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        cmd = sub.add_parser(command, help=_HELP[command])
        if command == "norm":
            cmd.add_argument("--space", required=True, help="ex.: ces:1,2:pow:0,pow:0@(0,1)")
            cmd.add_argument("--f", required=True, dest="f_path", help="JSON {breaks, values}")
        else:
            cmd.add_argument("--source", required=True)
            cmd.add_argument("--target", required=True)
            _add_oracle(cmd)
        if command == "multiplier":
            cmd.add_argument("--g", required=True, help="Peso multiplicador na DSL de pesos")
        _add_common(cmd)
    return parser


def build_request(args: argparse.Namespace) -> RunRequest:
    """Monta a requisição: arquivo de configuração e, por cima, as opções da linha."""
    if args.config:
        oracle_cfg, numerics = load_config(args.config)
    else:
        oracle_cfg, numerics = OracleConfig(), DEFAULT_NUMERICS
    flags = {
        name: getattr(args, name, None)
        for name in ("grid_size", "restarts", "ascent_iters", "seed")
    }
    overrides = {k: v for k, v in flags.items() if v is not None}
    if overrides:
        oracle_cfg = oracle_cfg.with_overrides(**overrides)
    return RunRequest(
        command=args.command,
        source=getattr(args, "source", None),
        target=getattr(args, "target", None),
        space=getattr(args, "space", None),
        f_path=getattr(args, "f_path", None),
        g=getattr(args, "g", None),
        oracle_cfg=oracle_cfg,
        numerics=numerics,
        output=args.output,
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        req = build_request(args)
        report = run(req)
    except LIBRARY_ERRORS as exc:
        logger.exception("cesembed %s falhou: %s", args.command, exc)
        return EXIT_ERROR
    print(emit_report(report, req.output))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
