"""The `bruteforce` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import csv
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat.base import ConstraintSet
from reslat.config import Settings
from reslat.oracle.canonical import canonical_hash
from reslat.oracle.search import brute_force
from reslat.subcommands.output import emit, print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments for an exhaustive model search."""
    parser.add_argument("--size", type=int, required=True, help="The carrier size")
    parser.add_argument(
        "--constraints",
        default="",
        help="Comma separated constraints, e.g. conservative,commutative",
    )
    parser.add_argument(
        "--emit",
        type=Path,
        metavar="DIR",
        help="Write one algebra document per model into this directory",
    )
    parser.add_argument("--jobs", type=int, help="Worker processes")


def run(args: Namespace, settings: Settings) -> int:
    """Search all models and print their canonical hashes."""
    constraints = ConstraintSet.parse(args.constraints)
    models = brute_force(
        args.size,
        constraints,
        max_size=settings.oracle_max_size,
        jobs=args.jobs or settings.jobs,
    )
    hashes = [canonical_hash(model) for model in models]
    if args.emit is not None:
        for model in models:
            emit(model, args.emit)
    if args.json:
        print_json(dict(size=args.size, constraints=constraints.names(), models=hashes))
    else:
        writer = csv.writer(sys.stdout)
        for digest in hashes:
            writer.writerow([digest])
        print(f"{len(models)} models")  # noqa: T201
    return 0
