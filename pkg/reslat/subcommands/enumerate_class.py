"""The `enumerate` CLI subcommand, listing every algebra of a class and size."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import csv
import logging
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat.census import CLASSES
from reslat.chains import compile_code, enumerate_codes
from reslat.config import Settings
from reslat.constructions.catalan import catalan_label, enumerate_catalan
from reslat.core.validation import complete_residuals
from reslat.subcommands.output import emit, print_json

logger = logging.getLogger(__name__)


def define_arguments(parser: ArgumentParser):
    """Create arguments to list every algebra of a class and size."""
    parser.add_argument("--class", dest="census_class", choices=CLASSES, required=True)
    parser.add_argument("--size", type=int, required=True, help="The carrier size")
    parser.add_argument(
        "--emit",
        type=Path,
        metavar="DIR",
        help="Write one algebra document per model into this directory",
    )


def run(args: Namespace, _settings: Settings) -> int:
    """Print the code or tree label of every algebra, optionally writing documents."""
    rows = []
    if args.census_class == "catalan":
        for algebra in enumerate_catalan(args.size):
            algebra = complete_residuals(algebra)
            rows.append(catalan_label(algebra))
            if args.emit is not None:
                emit(algebra, args.emit)
    else:
        commutative_only = args.census_class == "cic"
        for code in enumerate_codes(args.size, commutative_only=commutative_only):
            rows.append(str(code))
            if args.emit is not None:
                emit(compile_code(code).algebra, args.emit)
    logger.info("enumerated %s algebras", len(rows))
    if args.json:
        print_json(rows)
    else:
        writer = csv.writer(sys.stdout)
        for row in rows:
            writer.writerow([row])
    return 0
