"""The `props` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Any, Dict

from reslat import document
from reslat.config import Settings
from reslat.core.congruence import atoms, congruences
from reslat.core.properties import properties
from reslat.core.validation import validate
from reslat.exceptions import InvalidDocumentError
from reslat.subcommands.output import print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments to list the properties of an algebra."""
    parser.add_argument("file", type=Path, metavar="FILE", help="The algebra document")
    parser.add_argument(
        "--congruences",
        action="store_true",
        help="Also compute the congruence lattice",
    )


def run(args: Namespace, settings: Settings) -> int:
    """Print the structural properties that hold."""
    algebra = document.load(args.file)
    if not validate(algebra).ok:
        raise InvalidDocumentError(f"{args.file} is not a residuated lattice")
    flags = properties(algebra)
    names = flags.names()
    data: Dict[str, Any] = dict(flags.to_data())
    if args.congruences:
        found = congruences(algebra, settings.congruence_max_size)
        simple = algebra.n > 1 and len(found) == 2
        irreducible = len(atoms(found)) == 1
        data["congruences"] = len(found)
        data["simple"] = simple
        data["subdirectly-irreducible"] = irreducible
        names.append(f"congruences={len(found)}")
        if simple:
            names.append("simple")
        if irreducible:
            names.append("subdirectly-irreducible")
    if args.json:
        print_json(data)
    else:
        for name in names:
            print(name)  # noqa: T201
    return 0
