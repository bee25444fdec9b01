"""Application entry point for the ``igv`` command.

Responsibilities:
- Parse the command line
- Hand the parsed command to the frontend and return its exit status
"""

from __future__ import annotations

import shlex
import sys
from typing import Sequence

from igv import __version__
from igv.frontend import EXIT_OK, EXIT_USAGE, build_parser, run_command


def main(argv: Sequence[str] | None = None) -> int:
    arguments = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(arguments)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.version:
        print(__version__)
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    return run_command(args, command_line=shlex.join(["igv", *arguments]))


if __name__ == "__main__":
    sys.exit(main())
