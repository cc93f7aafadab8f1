"""Command-line entry point.

Usage:
    python -m src.cli.main compute graph.txt --method both --json
    python -m src.cli.main generate --family chain1 --k 6 --h 2 -o chain.txt
    python -m src.cli.main verify --trials 1000 --max-blocks 60 --max-cycle 12 --seed 42
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import NoReturn

from rich.logging import RichHandler

from src.cli.commands import (
    cmd_census,
    cmd_compute,
    cmd_generate,
    cmd_generate_random,
    cmd_verify,
)
from src.cli.consts import (
    DEFAULT_CYCLE_PROBABILITY,
    DEFAULT_MAX_BLOCKS,
    DEFAULT_MAX_CYCLE,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DEFAULT_WORKERS,
    EXIT_INPUT_ERROR,
    TITLE,
)
from src.cli.report import err_console
from src.core.consts import LOG_LEVEL_ENV
from src.core.errors import PolarityError
from src.core.polarity import Family, Method


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with 1; 2 means disagreement."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpolarity", description=TITLE)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (-vv for debug)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Polarity index of a graph file")
    compute.add_argument("file", type=Path)
    compute.add_argument(
        "--method", choices=[m.value for m in Method], default=Method.BOTH.value
    )
    compute.add_argument("--wiener", action="store_true", help="Also report the Wiener index")
    compute.add_argument(
        "--boiling-point",
        nargs=3,
        type=float,
        metavar=("A", "B", "C"),
        help="Evaluate a*W + b*Wp + c",
    )
    compute.add_argument("--json", action="store_true")
    compute.add_argument("--report-dir", type=Path)
    compute.set_defaults(
        handler=lambda a: cmd_compute(
            a.file,
            Method(a.method),
            json_flag=a.json,
            wiener_flag=a.wiener,
            boiling_coefficients=tuple(a.boiling_point) if a.boiling_point else None,
            report_dir=a.report_dir,
        )
    )

    generate = sub.add_parser("generate", help="Write a chain k-gon cactus")
    generate.add_argument("--family", required=True, choices=[f.value for f in Family])
    generate.add_argument("--k", type=int, required=True)
    generate.add_argument("--h", type=int, required=True)
    generate.add_argument("--offset", type=int)
    generate.add_argument("-o", "--output", type=Path, required=True)
    generate.set_defaults(
        handler=lambda a: cmd_generate(a.family, a.k, a.h, a.offset, a.output)
    )

    generate_random = sub.add_parser("generate-random", help="Write a seeded random cactus")
    generate_random.add_argument("--blocks", type=int, required=True)
    generate_random.add_argument("--p-cycle", type=float, default=DEFAULT_CYCLE_PROBABILITY)
    generate_random.add_argument("--max-cycle", type=int, default=DEFAULT_MAX_CYCLE)
    generate_random.add_argument("--seed", type=int, default=DEFAULT_SEED)
    generate_random.add_argument("-o", "--output", type=Path, required=True)
    generate_random.set_defaults(
        handler=lambda a: cmd_generate_random(
            a.blocks, a.p_cycle, a.max_cycle, a.seed, a.output
        )
    )

    census = sub.add_parser("census", help="Cycle and pendant-pattern census of a cactus")
    census.add_argument("file", type=Path)
    census.add_argument("--json", action="store_true")
    census.set_defaults(handler=lambda a: cmd_census(a.file, json_flag=a.json))

    verify = sub.add_parser("verify", help="Formula vs oracle on random cactuses")
    verify.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    verify.add_argument("--max-blocks", type=int, default=DEFAULT_MAX_BLOCKS)
    verify.add_argument("--max-cycle", type=int, default=DEFAULT_MAX_CYCLE)
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--report-dir", type=Path)
    verify.set_defaults(
        handler=lambda a: cmd_verify(
            a.trials,
            a.max_blocks,
            a.max_cycle,
            a.seed,
            workers=a.workers,
            json_flag=a.json,
            report_dir=a.report_dir,
        )
    )
    return parser


def configure_logging(verbosity: int) -> None:
    """Route library logging through rich; the environment sets the floor."""
    unknown_level = False
    if verbosity >= 2:
        level: int | str = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
        if level not in logging.getLevelNamesMapping():
            unknown_level = True
            level = logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )
    if unknown_level:
        logging.getLogger(__name__).warning(
            "Unknown %s=%r, using WARNING", LOG_LEVEL_ENV, os.environ[LOG_LEVEL_ENV]
        )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (PolarityError, OSError) as exc:
        err_console.print(
            f"error: {exc}",
            style="bold red",
            markup=False,
            highlight=False,
            soft_wrap=True,
        )
        return EXIT_INPUT_ERROR


def run() -> NoReturn:
    sys.exit(main())


if __name__ == "__main__":
    run()
