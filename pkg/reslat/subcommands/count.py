"""The `count` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat.census import CLASSES, census, write_table
from reslat.config import Settings
from reslat.subcommands.output import parse_names, print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments to compare counting methods."""
    parser.add_argument("--class", dest="census_class", choices=CLASSES, required=True)
    parser.add_argument("--size", type=int, required=True, help="The largest carrier size")
    parser.add_argument(
        "--from",
        dest="from_size",
        type=int,
        help="The smallest carrier size (defaults to --size)",
    )
    parser.add_argument(
        "--methods",
        default="formula,enumerate",
        help="Comma separated methods: formula, recurrence, closed, enumerate, bruteforce",
    )
    parser.add_argument("--output", type=Path, help="Write the table (.parquet, .csv or Arrow IPC)")
    parser.add_argument("--jobs", type=int, help="Worker processes for brute force")


def run(args: Namespace, settings: Settings) -> int:
    """Print the census and return 1 when two methods disagree."""
    first = args.size if args.from_size is None else args.from_size
    report = census(
        args.census_class,
        range(first, args.size + 1),
        parse_names(args.methods),
        max_brute_size=settings.oracle_max_size,
        jobs=args.jobs or settings.jobs,
    )
    if args.output is not None:
        write_table(report.to_table(), args.output)
    if args.json:
        print_json(report.to_data())
    else:
        print(report.format_text())  # noqa: T201
    return 0 if report.ok else 1
