"""The `check` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import csv
import sys
from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.config import Settings
from reslat.core.validation import validate
from reslat.subcommands.output import print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments to validate an algebra document."""
    parser.add_argument("file", type=Path, metavar="FILE", help="The algebra document")


def run(args: Namespace, _settings: Settings) -> int:
    """Validate an algebra and print the violated axioms."""
    report = validate(document.load(args.file))
    if args.json:
        print_json(report.to_data())
    elif report.ok:
        print("ok")  # noqa: T201
    else:
        writer = csv.writer(sys.stdout)
        for axiom, witness in report.violations:
            writer.writerow([axiom] + list(witness))
    return 0 if report.ok else 1
