"""The `amalgamate` CLI subcommand."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from argparse import ArgumentParser, Namespace
from pathlib import Path

from reslat import document
from reslat.base import Embedding, Span
from reslat.config import Settings
from reslat.constructions.amalgam import amalgamate_cic, amalgamate_osm
from reslat.subcommands.output import parse_indices, print_json


def define_arguments(parser: ArgumentParser):
    """Create arguments for a span A → B, A → C."""
    parser.add_argument("a", type=Path, metavar="A", help="The common source")
    parser.add_argument("b", type=Path, metavar="B", help="The target of the first map")
    parser.add_argument("c", type=Path, metavar="C", help="The target of the second map")
    parser.add_argument("--map1", required=True, help="Images in B of 0..|A|-1, comma separated")
    parser.add_argument("--map2", required=True, help="Images in C of 0..|A|-1, comma separated")
    parser.add_argument(
        "--mode",
        choices=["cic", "osm"],
        default="cic",
        help="Commutative idempotent chains or odd Sugihara chains",
    )


def run(args: Namespace, _settings: Settings) -> int:
    """Print the amalgam and its two embeddings."""
    a, b, c = (document.load(path) for path in (args.a, args.b, args.c))
    span = Span(
        Embedding(a, b, tuple(parse_indices(args.map1))),
        Embedding(a, c, tuple(parse_indices(args.map2))),
    )
    amalgam = amalgamate_osm(span) if args.mode == "osm" else amalgamate_cic(span)
    print_json(
        dict(
            d=amalgam.d.to_data(),
            j1=list(amalgam.j1.map),
            j2=list(amalgam.j2.map),
        )
    )
    return 0
