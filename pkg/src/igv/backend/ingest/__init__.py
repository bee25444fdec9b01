"""Ingestion package.
- Line-based parsing of game files
- Validation with line-numbered issues
- Writing games back in the same format
"""

from .game_reader import (
    GameFileError,
    ParseIssue,
    parse_game_file,
    parse_game_text,
    render_game,
    write_game_file,
)

__all__ = [
    "GameFileError",
    "ParseIssue",
    "parse_game_file",
    "parse_game_text",
    "render_game",
    "write_game_file",
]
