"""The `fep` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.config import Settings
from reslat.constructions.fep import check_partial_preservation, fep_closure
from reslat.exceptions import InvariantBreach
from reslat.subcommands.output import parse_indices, print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments to embed a partial subalgebra into a finite algebra."""
    parser.add_argument("file", type=Path, metavar="A", help="A conservative algebra document")
    parser.add_argument("--subset", required=True, help="Comma separated elements of A")


def run(args: Namespace, _settings: Settings) -> int:
    """Print the finite algebra, its carrier in A and the inclusion of the subset."""
    algebra = document.load(args.file)
    closure = fep_closure(algebra, parse_indices(args.subset))
    report = check_partial_preservation(algebra, closure)
    if not report.ok:
        raise InvariantBreach("fep_closure", report)
    print_json(
        dict(
            algebra=closure.algebra.to_data(),
            carrier=list(closure.carrier),
            inclusion={str(x): label for x, label in closure.inclusion().items()},
        )
    )
    return 0
