"""Command execution for the ``igv`` command line.

Each subcommand is a small handler over a shared ``CommandContext``. Domain
errors are reported through the message catalog and mapped to exit code 1;
usage errors never reach this module (argparse exits with 2).
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Protocol

import numpy as np

from igv import __version__
from igv.backend.axioms import AxiomStatus, audit_game
from igv.backend.domain import (
    GameError,
    InputError,
    SetSystem,
    ValueKind,
    expected_shapley_mc,
    uniqueness_report,
    value,
)
from igv.backend.domain.numeric import format_scalar
from igv.backend.domain.values import uniqueness_oracle
from igv.backend.experiments import (
    census_exhaustive,
    census_sampled,
    difference_experiment,
    histogram,
    ic_systems,
    plan_sample_size,
    rank_frequency,
)
from igv.backend.ingest import GameFileError, parse_game_file
from igv.backend.persistence import Database, RunMetadata, RuntimePaths
from igv.backend.reporting import (
    emit_plot,
    output_header,
    write_axiom_csv,
    write_census_csv,
    write_differences_csv,
    write_histogram_csv,
    write_rank_csv,
    write_workbook,
)
from igv.config import ToolkitConfig, load_config
from igv.utils.logging import configure_logging

from . import messages

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

RECORDED_COMMANDS = frozenset({"audit", "census", "experiment"})


class FrontendIO(Protocol):
    """Output surface for command results and errors."""

    def display(self, message: str) -> None:
        """Show a result line."""

    def error(self, message: str) -> None:
        """Show an error line."""


class ConsoleIO:
    def display(self, message: str) -> None:
        print(message)

    def error(self, message: str) -> None:
        print(message, file=sys.stderr)


@dataclass
class CommandContext:
    args: argparse.Namespace
    config: ToolkitConfig
    io: FrontendIO
    command_line: str
    seed: int
    paths: RuntimePaths | None = None
    database: Database | None = None

    @property
    def header(self) -> list[str]:
        return output_header(__version__, self.command_line, self.seed)

    @property
    def workers(self) -> int:
        return getattr(self.args, "workers", None) or self.config.monte_carlo.workers

    def output_path(self, default_name: str) -> Path | None:
        explicit = getattr(self.args, "out", None)
        if explicit is not None:
            return explicit
        if self.paths is not None:
            return self.paths.output_dir / default_name
        return None

    def number(self, value: object, *, exact: bool = False) -> str:
        return format_scalar(value, digits=self.config.numeric.float_digits, exact=exact)


def _fresh_seed() -> int:
    return int(np.random.SeedSequence().generate_state(1)[0])


def _value(ctx: CommandContext) -> None:
    args = ctx.args
    game = parse_game_file(args.game, exact=args.exact)
    if args.kind == "expected":
        if args.samples is None:
            raise InputError("--kind expected needs --samples")
        allocation = expected_shapley_mc(
            game,
            args.samples,
            ctx.seed,
            batch_size=ctx.config.monte_carlo.batch_size,
            workers=ctx.workers,
            tol=ctx.config.numeric.tolerance,
        )
    else:
        allocation = value(game, args.kind)
    ctx.io.display(" ".join(ctx.number(x, exact=args.exact) for x in allocation.payoffs))


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _uniqueness(ctx: CommandContext) -> None:
    # the empty coalition is always known
    system = SetSystem(ctx.args.players, ctx.args.system | 1)
    report = uniqueness_report(system)
    ctx.io.display(messages.RESULTS["unique" if report.unique else "not_unique"])
    ctx.io.display(
        messages.RESULTS["uniqueness_detail"].format(
            closed=_yes_no(report.intersection_closed), grand=_yes_no(report.has_grand)
        )
    )
    if report.rank_a is not None:
        ctx.io.display(
            messages.RESULTS["ranks"].format(
                rank_a=report.rank_a,
                rank_stacked=report.rank_stacked,
                rows=report.rows,
                columns=report.columns,
            )
        )
    if ctx.args.oracle:
        same = uniqueness_oracle(system, ctx.seed)
        ctx.io.display(
            messages.RESULTS["oracle"].format(verdict="same image" if same else "different images")
        )


def _audit(ctx: CommandContext) -> None:
    args = ctx.args
    game = parse_game_file(args.game, exact=args.exact)
    kinds = tuple(args.kinds) if args.kinds else tuple(ValueKind)
    reports = audit_game(game, ctx.seed, kinds=kinds, tol=ctx.config.numeric.tolerance)
    for report in reports:
        discrepancy = "" if report.discrepancy is None else ctx.number(report.discrepancy)
        ctx.io.display(
            messages.RESULTS["audit_line"].format(
                axiom=report.axiom.value,
                kind=report.kind.value,
                status=report.status.value,
                discrepancy=discrepancy or report.note,
            ).rstrip()
        )
    ctx.io.display(
        messages.RESULTS["audit_summary"].format(
            checks=len(reports),
            violated=sum(1 for r in reports if r.status is AxiomStatus.VIOLATED),
            inapplicable=sum(1 for r in reports if r.status is AxiomStatus.INAPPLICABLE),
        )
    )
    path = ctx.output_path("axioms.csv")
    if path is not None:
        write_axiom_csv(reports, path, header=ctx.header)
        ctx.io.display(messages.COMPLETION["wrote"].format(path=path))
    if ctx.database is not None:
        ctx.database.record_axiom_reports(reports)


def _census(ctx: CommandContext) -> None:
    args, config = ctx.args, ctx.config
    n = args.players
    samples = args.samples
    if samples is None and n > config.enumeration.exhaustive_limit:
        samples = config.census.samples.get(n)
    ctx.io.display(messages.PROGRESS["census"].format(n=n))
    if samples is None:
        row = census_exhaustive(n, limit=config.enumeration.exhaustive_limit, workers=ctx.workers)
    else:
        row = census_sampled(n, samples, ctx.seed, workers=ctx.workers)

    buffer = io.StringIO()
    write_census_csv([row], buffer)
    for line in buffer.getvalue().splitlines():
        ctx.io.display(line)
    if row.family_matches is not None:
        ctx.io.display(messages.RESULTS["family"].format(matches=_yes_no(row.family_matches)))

    path = ctx.output_path("census.csv")
    if path is not None:
        write_census_csv([row], path, header=ctx.header)
        ctx.io.display(messages.COMPLETION["wrote"].format(path=path))
    if args.xlsx is not None:
        write_workbook(args.xlsx, header=ctx.header, census=[row])
        ctx.io.display(messages.COMPLETION["wrote"].format(path=args.xlsx))
    if ctx.database is not None:
        ctx.database.record_census(row)


def _companion(path: Path, label: str) -> Path:
    return path.with_name(f"{path.stem}_{label}{path.suffix or '.csv'}")


def _experiment(ctx: CommandContext) -> None:
    args, config = ctx.args, ctx.config
    settings = config.experiments
    reference = "pairwise" if args.reference == "diff" else "equal_division"
    games = args.games or settings.games_per_system
    limit = config.enumeration.exhaustive_limit

    if args.plan:
        ctx.io.display(messages.PROGRESS["pilot"].format(count=settings.pilot_systems))
        plan = plan_sample_size(
            args.players,
            ctx.seed,
            pilot_systems=settings.pilot_systems,
            games_per_system=games,
            z=settings.cochran_z,
            e=settings.cochran_e,
            reference=reference,
        )
        ctx.io.display(messages.RESULTS["sample_plan"].format(sd=plan.pilot_sd, size=plan.size))
        systems = ic_systems(args.players, samples=plan.size, seed=ctx.seed, limit=limit)
    elif args.samples is not None:
        systems = ic_systems(args.players, samples=args.samples, seed=ctx.seed, limit=limit)
    else:
        systems = ic_systems(args.players, limit=limit)

    ctx.io.display(messages.PROGRESS["experiment"].format(count=len(systems), games=games))
    report = difference_experiment(systems, games, ctx.seed, reference, workers=ctx.workers)
    ranks = rank_frequency(report)
    value_range = settings.pairwise_range if reference == "pairwise" else settings.ed_range
    bins = histogram(report, bin_width=settings.bin_width, value_range=value_range)

    ctx.io.display(
        messages.RESULTS["systems"].format(evaluated=len(report), skipped=len(report.skipped))
    )
    for row in ranks.rows:
        ctx.io.display(
            messages.RESULTS["rank_line"].format(
                series=row.series,
                counts=" ".join(str(count) for count in row.counts),
                tied=ranks.tied_systems,
            )
        )

    path = ctx.output_path(f"{args.reference}.csv")
    if path is not None:
        rank_path = _companion(path, "ranks")
        hist_path = _companion(path, "hist")
        write_differences_csv(report, path, header=ctx.header)
        write_rank_csv(ranks, rank_path, header=ctx.header)
        write_histogram_csv(bins, hist_path, header=ctx.header)
        for written in (path, rank_path, hist_path):
            ctx.io.display(messages.COMPLETION["wrote"].format(path=written))
    if args.xlsx is not None:
        write_workbook(args.xlsx, header=ctx.header, report=report, ranks=ranks, bins=bins)
        ctx.io.display(messages.COMPLETION["wrote"].format(path=args.xlsx))
    if ctx.database is not None:
        ctx.database.record_differences(report)


def _plot(ctx: CommandContext) -> None:
    target = emit_plot(ctx.args.source, ctx.args.kind, ctx.args.out)
    ctx.io.display(messages.COMPLETION["wrote"].format(path=target))


HANDLERS: dict[str, Callable[[CommandContext], None]] = {
    "value": _value,
    "uniqueness": _uniqueness,
    "audit": _audit,
    "census": _census,
    "experiment": _experiment,
    "plot": _plot,
}


def _display_error(out: FrontendIO, exc: GameError | None) -> None:
    code = exc.code if exc is not None else "unexpected"
    entry = messages.ERRORS.get(code, messages.ERRORS["unexpected"])
    detail = f" {exc}" if exc is not None else ""
    out.error(f"{entry['title']} [{code}]{detail}")
    if isinstance(exc, GameFileError):
        for issue in exc.issues:
            out.error(f"  {issue.message}")
    out.error(entry["next_step"])


def _start_run(
    args: argparse.Namespace, config: ToolkitConfig, command_line: str, seed: int
) -> tuple[RuntimePaths | None, Database | None]:
    record = getattr(args, "record", False) and config.runs.record
    if args.command not in RECORDED_COMMANDS or not record:
        return None, None
    paths = RuntimePaths.create(suffix=args.command)
    database = Database(paths)
    database.initialize(
        RunMetadata(
            run_id=paths.run_id,
            app_version=__version__,
            command_line=command_line,
            seed=seed,
        )
    )
    return paths, database


def run_command(
    args: argparse.Namespace,
    *,
    config: ToolkitConfig | None = None,
    io: FrontendIO | None = None,
    command_line: str = "",
) -> int:
    """Execute a parsed command and return its exit status."""

    out = io or ConsoleIO()
    try:
        resolved_config = config or load_config(getattr(args, "config", None))
        seed = args.seed if args.seed is not None else _fresh_seed()
        paths, database = _start_run(args, resolved_config, command_line, seed)
        configure_logging(
            paths.log_file if paths is not None else None,
            level=args.log_level or resolved_config.logging.level,
            run_id=paths.run_id if paths is not None else "-",
        )
        if paths is not None:
            out.display(messages.COMPLETION["run_id"].format(run_id=paths.run_id))
        logger.info("Running: %s (seed %s)", command_line, seed)
        ctx = CommandContext(
            args=args,
            config=resolved_config,
            io=out,
            command_line=command_line,
            seed=seed,
            paths=paths,
            database=database,
        )
        HANDLERS[args.command](ctx)
    except GameError as exc:
        logger.info("%s failed with %s: %s", args.command, exc.code, exc)
        _display_error(out, exc)
        return EXIT_ERROR
    except Exception:
        logger.exception("Unexpected failure in %s", args.command)
        _display_error(out, None)
        return EXIT_ERROR
    return EXIT_OK
