"""The `construct` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.base import FinAlgebra, SkeletonDecomposition
from reslat.chains import compile_code, parse_code
from reslat.config import Settings
from reslat.constructions import (
    abs_chain,
    c4,
    catalan_sum,
    opposite_c4,
    sugihara_chain,
    tensor,
)
from reslat.subcommands.output import parse_indices


def define_arguments(parser: ArgumentParser):
    """Create arguments for each named construction."""
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--sugihara", type=int, metavar="K", help="The odd Sugihara chain on -K..K")
    group.add_argument("--abs", type=int, metavar="K", help="The absolute-value chain on -K..K")
    group.add_argument("--c4", action="store_true", help="The noncommutative 4-element chain")
    group.add_argument("--opposite-c4", action="store_true", help="The opposite of --c4")
    group.add_argument("--code", metavar="CODE", help="Compile a code over n, p, C and I")
    group.add_argument(
        "--catalan-sum",
        nargs=2,
        type=Path,
        metavar=("A", "B"),
        help="The Catalan sum of two algebra documents",
    )
    group.add_argument(
        "--tensor",
        nargs=2,
        metavar=("SKELETON", "FIBERSPEC"),
        help="Glue fibers of the given lengths, e.g. 1,2,1, over a skeleton document",
    )
    parser.add_argument("--output", type=Path, help="Write the document to this file")


def build(args: Namespace) -> FinAlgebra:
    """Return the algebra the arguments describe."""
    if args.sugihara is not None:
        return sugihara_chain(args.sugihara)
    if args.abs is not None:
        return abs_chain(args.abs)
    if args.c4:
        return c4()
    if args.opposite_c4:
        return opposite_c4()
    if args.code is not None:
        return compile_code(parse_code(args.code)).algebra
    if args.catalan_sum is not None:
        first, second = args.catalan_sum
        return catalan_sum(document.load(first), document.load(second))
    skeleton_path, fiberspec = args.tensor
    return tensor(SkeletonDecomposition(document.load(skeleton_path), tuple(parse_indices(fiberspec))))


def run(args: Namespace, _settings: Settings) -> int:
    """Print or write the constructed algebra document."""
    algebra = build(args)
    if args.output is not None:
        document.dump(algebra, args.output)
    else:
        print(document.dumps(algebra), end="")  # noqa: T201
    return 0
