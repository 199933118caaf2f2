"""The `export` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.config import Settings
from reslat.diagram import to_dot


def define_arguments(parser: ArgumentParser):
    """Create arguments to export Hasse diagrams."""
    parser.add_argument(
        "--dot",
        type=Path,
        required=True,
        metavar="FILE",
        help="The algebra document to draw",
    )
    parser.add_argument(
        "--both",
        action="store_true",
        help="Draw ≤ and ⊑ in one graph instead of two",
    )
    parser.add_argument("--output", type=Path, help="Write the DOT text to this file")


def run(args: Namespace, _settings: Settings) -> int:
    """Print or write the DOT text."""
    text = to_dot(document.load(args.dot), both=args.both)
    if args.output is not None:
        args.output.write_text(text, encoding="utf-8")
    else:
        print(text, end="")  # noqa: T201
    return 0
