"""Command-line interface."""

import sys

from .commands import build_parser, run
from .workspace import Workspace, dump_object, load_object, write_object


def main() -> None:
    """Main CLI entry point."""
    sys.exit(run(sys.argv[1:]))


__all__ = [
    "Workspace",
    "build_parser",
    "dump_object",
    "load_object",
    "main",
    "run",
    "write_object",
]
