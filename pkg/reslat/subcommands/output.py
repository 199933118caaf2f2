"""Helpers shared by the CLI subcommands."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import json
from pathlib import Path
from typing import Any, List

from reslat import document
from reslat.base import FinAlgebra
from reslat.oracle.canonical import canonical_hash


def parse_indices(text: str) -> List[int]:
    """Parse a comma separated list of element indices."""
    return [int(part) for part in text.split(",") if part.strip() != ""]


def parse_names(text: str) -> List[str]:
    """Parse a comma separated list of names."""
    return [part.strip() for part in text.split(",") if part.strip() != ""]


def print_json(data: Any):
    """Print a JSON value on stdout."""
    print(json.dumps(data, indent=2))  # noqa: T201


def emit(algebra: FinAlgebra, directory: Path) -> Path:
    """Write an algebra document named after its canonical hash into a directory."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{canonical_hash(algebra)}.json"
    document.dump(algebra, path)
    return path
