"""Frontend package for the command line.
* Argument parsing for every subcommand
* Command execution over the backend
* Message catalog for results and errors
"""

from .cli import build_parser
from .commands import EXIT_ERROR, EXIT_OK, EXIT_USAGE, ConsoleIO, FrontendIO, run_command
from .messages import COMPLETION, ERRORS, PROGRESS, RESULTS

__all__ = [
    "COMPLETION",
    "ConsoleIO",
    "ERRORS",
    "EXIT_ERROR",
    "EXIT_OK",
    "EXIT_USAGE",
    "FrontendIO",
    "PROGRESS",
    "RESULTS",
    "build_parser",
    "run_command",
]
