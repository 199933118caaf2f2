"""The `decompose` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.chains import recover_code
from reslat.config import Settings
from reslat.constructions.catalan import catalan_decompose, catalan_label
from reslat.core.structure import skeleton
from reslat.subcommands.output import print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments to split an algebra into its parts."""
    parser.add_argument("--mode", choices=["catalan", "skeleton", "code"], required=True)
    parser.add_argument("file", type=Path, metavar="FILE", help="The algebra document")


def run(args: Namespace, _settings: Settings) -> int:
    """Print the parts as a JSON object."""
    algebra = document.load(args.file)
    if args.mode == "catalan":
        first, second = catalan_decompose(algebra)
        print_json(
            dict(
                label=catalan_label(algebra),
                first=first.to_data(),
                second=second.to_data(),
            )
        )
    elif args.mode == "skeleton":
        parts = skeleton(algebra)
        print_json(
            dict(
                skeleton=parts.algebra.to_data(),
                elements=list(parts.elements),
                fibers=[list(fiber) for fiber in parts.fibers],
            )
        )
    else:
        print_json(dict(code=str(recover_code(algebra))))
    return 0
