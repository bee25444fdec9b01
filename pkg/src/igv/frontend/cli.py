"""Argument parser for the ``igv`` command."""

from __future__ import annotations

import argparse
from pathlib import Path

from . import messages

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="YAML configuration file")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper)
    parser.add_argument("--seed", type=int, help="master seed; a fresh one is drawn and echoed if omitted")


def _recorded(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, help="CSV report path")
    parser.add_argument(
        "--no-record",
        dest="record",
        action="store_false",
        help="do not create a run workspace",
    )
    parser.add_argument("--workers", type=int, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=messages.PROGRAM["name"], description=messages.PROGRAM["description"]
    )
    parser.add_argument("--version", action="store_true", help="print the version and exit")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    value = commands.add_parser("value", help="allocation of a game file")
    _common(value)
    value.add_argument("--game", type=Path, required=True)
    value.add_argument("--kind", choices=("ud", "r", "ic", "expected"), default="ud")
    value.add_argument("--exact", action="store_true", help="rational arithmetic and output")
    value.add_argument("--samples", type=int, help="draws for --kind expected")
    value.add_argument("--workers", type=int, help="worker processes for --kind expected")

    uniqueness = commands.add_parser("uniqueness", help="is the UD-value unique on a set system")
    _common(uniqueness)
    uniqueness.add_argument("--players", type=int, required=True)
    uniqueness.add_argument("--system", type=int, required=True, help="decimal membership mask")
    uniqueness.add_argument(
        "--oracle", action="store_true", help="also run the randomized two-point check"
    )

    audit = commands.add_parser("audit", help="axiom checks on a game file")
    _common(audit)
    _recorded(audit)
    audit.add_argument("--game", type=Path, required=True)
    audit.add_argument("--kind", action="append", choices=("ud", "r", "ic"), dest="kinds")
    audit.add_argument("--exact", action="store_true")

    census = commands.add_parser("census", help="count intersection-closed and unique systems")
    _common(census)
    _recorded(census)
    census.add_argument("--players", type=int, required=True)
    census.add_argument("--samples", type=int)
    census.add_argument("--xlsx", type=Path, help="also write an Excel workbook")

    experiment = commands.add_parser("experiment", help="value distances on random games")
    _common(experiment)
    _recorded(experiment)
    experiment.add_argument("reference", choices=("diff", "ed"))
    experiment.add_argument("--players", type=int, required=True)
    scope = experiment.add_mutually_exclusive_group()
    scope.add_argument("--exhaustive", action="store_true")
    scope.add_argument("--samples", type=int)
    scope.add_argument(
        "--plan", action="store_true", help="size the sample from a pilot run"
    )
    experiment.add_argument("--games", type=int, help="games per set system")
    experiment.add_argument("--xlsx", type=Path, help="also write an Excel workbook")

    plot = commands.add_parser("plot", help="render a CSV report as SVG")
    _common(plot)
    plot.add_argument("--in", dest="source", type=Path, required=True)
    plot.add_argument("--kind", choices=("lines", "ranks", "hist"), required=True)
    plot.add_argument("--out", type=Path, required=True)

    return parser
