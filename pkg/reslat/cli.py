"""CLI for reslat.

Every command reads algebra documents or sizes and writes its result to stdout.
Exit status 2 is a usage error, 1 a failed check or invalid input and 3 a
construction that broke its own invariants.
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import argparse
import logging
import sys
from typing import List, Optional

import reslat.logging
import reslat.subcommands as subcommand
from reslat.config import DEFAULT_CONFIG_FILE, Settings, from_toml
from reslat.exceptions import InvariantBreach, ReslatException

logger = logging.getLogger(__name__)

COMMANDS = {
    "check": (subcommand.check, "Validate an algebra document"),
    "props": (subcommand.props, "List the structural properties of an algebra"),
    "enumerate": (subcommand.enumerate_class, "Enumerate a class of algebras of one size"),
    "count": (subcommand.count, "Compare counting methods"),
    "bruteforce": (subcommand.bruteforce, "Search all models of a size exhaustively"),
    "construct": (subcommand.construct, "Build a named algebra"),
    "decompose": (subcommand.decompose, "Split an algebra into its parts"),
    "amalgamate": (subcommand.amalgamate, "Complete a span of embeddings"),
    "fep": (subcommand.fep, "Embed a partial subalgebra into a finite algebra"),
    "export": (subcommand.export, "Export Hasse diagrams as DOT"),
}


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse the command line arguments given to reslat."""
    parser = argparse.ArgumentParser(description="Work with finite idempotent residuated lattices.")
    parser.add_argument(
        "--config-file", default=DEFAULT_CONFIG_FILE, help="Path to the configuration file"
    )
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")
    subparsers = parser.add_subparsers(dest="action", required=True, help="Select the CLI action")
    for name, (module, help_text) in COMMANDS.items():
        module.define_arguments(subparsers.add_parser(name, help=help_text))
    return parser.parse_args(argv)


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""
    try:
        args = parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    try:
        config = from_toml(args.config_file, required=args.config_file != DEFAULT_CONFIG_FILE)
        reslat.logging.configure(config)
        settings = Settings.from_config(config)
    except (OSError, ReslatException) as err:
        print(f"error: {err}", file=sys.stderr)  # noqa: T201
        return 2
    module, _ = COMMANDS[args.action]
    try:
        return module.run(args, settings)
    except InvariantBreach as err:
        print(f"error: {err}", file=sys.stderr)  # noqa: T201
        for axiom, witness in err.report.violations:
            print(f"  {axiom}: {list(witness)}", file=sys.stderr)  # noqa: T201
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)  # noqa: T201
        return 2
    except (OSError, ReslatException) as err:
        print(f"error: {err}", file=sys.stderr)  # noqa: T201
        return 1


def _run() -> None:
    sys.exit(run())


if __name__ == "__main__":
    _run()
