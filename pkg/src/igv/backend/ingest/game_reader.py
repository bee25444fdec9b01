"""Game file ingestion boundary.

Game files are UTF-8 text. ``#`` starts a comment. The first content line is
``players <n>``; every further line is ``<coalition-mask> <worth>`` with the
mask in decimal. The set system is exactly the listed masks plus the empty
coalition. Every problem is recorded as a ``ParseIssue``; any fatal issue
aborts the parse with all issues attached.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from igv.backend.domain.errors import GameError
from igv.backend.domain.models import Coalition, IncompleteGame
from igv.backend.domain.numeric import Scalar, parse_scalar

logger = logging.getLogger(__name__)

HEADER_KEYWORD = "players"


@dataclass(frozen=True)
class ParseIssue:
    """Structured problem found while reading a game file."""

    line_number: int | None
    error_type: str
    message: str
    severity: str


class GameFileError(GameError):
    """Fatal parse problem; carries every issue found in the file."""

    default_code = "parse_error"

    def __init__(self, message: str, issues: Sequence[ParseIssue]) -> None:
        super().__init__(message)
        self.issues = tuple(issues)


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield line_number, content


def _fatal(line_number: int | None, error_type: str, message: str) -> ParseIssue:
    return ParseIssue(line_number, error_type, message, "fatal")


def _parse_header(line_number: int, content: str) -> tuple[int | None, ParseIssue | None]:
    tokens = content.split()
    if len(tokens) != 2 or tokens[0].casefold() != HEADER_KEYWORD:
        return None, _fatal(line_number, "missing_header", f"line {line_number}: expected 'players <n>'")
    try:
        n = int(tokens[1])
    except ValueError:
        n = 0
    if n < 1:
        return None, _fatal(
            line_number, "missing_header", f"line {line_number}: player count must be a positive integer"
        )
    return n, None


def parse_game_text(text: str, *, exact: bool = False, source: str = "<text>") -> IncompleteGame:
    """Parse game-file content.

    Raises:
        GameFileError: If the header is missing or any line is invalid.
    """

    lines = iter(_content_lines(text))
    first = next(lines, None)
    if first is None:
        issue = _fatal(None, "missing_header", f"{source}: file has no 'players <n>' line")
        raise GameFileError(issue.message, [issue])
    n, header_issue = _parse_header(*first)
    if header_issue is not None or n is None:
        assert header_issue is not None
        raise GameFileError(f"{source}: {header_issue.message}", [header_issue])

    worth: dict[Coalition, Scalar] = {}
    issues: list[ParseIssue] = []
    for line_number, content in lines:
        tokens = content.split()
        if len(tokens) != 2:
            issues.append(
                _fatal(line_number, "malformed_line", f"line {line_number}: expected '<mask> <value>'")
            )
            continue
        try:
            mask = int(tokens[0])
        except ValueError:
            issues.append(
                _fatal(line_number, "malformed_line", f"line {line_number}: mask {tokens[0]!r} is not an integer")
            )
            continue
        if mask < 0 or mask >> n:
            issues.append(
                _fatal(
                    line_number,
                    "mask_out_of_range",
                    f"line {line_number}: mask {mask} out of range for {n} players",
                )
            )
            continue
        if mask in worth:
            issues.append(
                _fatal(line_number, "duplicate_mask", f"line {line_number}: mask {mask} listed twice")
            )
            continue
        try:
            amount = parse_scalar(tokens[1], exact=exact)
        except (ValueError, ZeroDivisionError):
            issues.append(
                _fatal(line_number, "bad_value", f"line {line_number}: value {tokens[1]!r} is not a number")
            )
            continue
        if mask == 0 and amount != 0:
            issues.append(
                _fatal(line_number, "bad_value", f"line {line_number}: the empty coalition must be worth 0")
            )
            continue
        worth[mask] = amount

    if issues:
        for issue in issues:
            logger.warning("%s: %s", source, issue.message)
        raise GameFileError(f"{source}: {len(issues)} invalid line(s)", issues)

    worth.setdefault(0, Fraction(0) if exact else 0.0)
    return IncompleteGame.from_values(n, worth)


def parse_game_file(path: Path | str, *, exact: bool = False) -> IncompleteGame:
    """Read a game file; worths are Fractions when ``exact`` is set, floats otherwise."""

    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as exc:
        issue = _fatal(None, "unreadable_file", f"failed to read {file_path}: {exc}")
        raise GameFileError(issue.message, [issue]) from exc
    return parse_game_text(text, exact=exact, source=str(file_path))


def _format_worth(worth: Scalar) -> str:
    if isinstance(worth, float):
        return repr(worth)
    return str(worth)


def render_game(game: IncompleteGame, *, header: Sequence[str] = ()) -> str:
    lines = [f"# {line}" for line in header]
    lines.append(f"{HEADER_KEYWORD} {game.n}")
    lines.extend(f"{mask} {_format_worth(game.worth[mask])}" for mask in game.system.coalitions[1:])
    return "\n".join(lines) + "\n"


def write_game_file(
    game: IncompleteGame, path: Path | str, *, header: Sequence[str] = ()
) -> Path:
    """Write ``game`` so that ``parse_game_file`` reads it back unchanged."""

    file_path = Path(path)
    file_path.write_text(render_game(game, header=header), encoding="utf-8")
    return file_path
