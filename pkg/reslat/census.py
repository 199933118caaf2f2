"""Compare counting methods for a class of algebras across sizes."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import pyarrow as pa
from pyarrow import csv as arrow_csv
from pyarrow import feather, parquet

from reslat.base import ConstraintSet
from reslat.chains import enumerate_codes
from reslat.constructions.catalan import enumerate_catalan
from reslat.counting import (
    catalan_by_convolution,
    catalan_count,
    count_cic,
    count_ic_closed,
    count_ic_formula,
    count_ic_recurrence,
)
from reslat.oracle.search import brute_force

logger = logging.getLogger(__name__)

CLASSES = ["cic", "ic", "catalan"]
METHODS = ["formula", "recurrence", "closed", "enumerate", "bruteforce"]

BRUTE_FORCE_CONSTRAINTS = {
    "cic": ConstraintSet.of("idempotent", "chain", "commutative"),
    "ic": ConstraintSet.of("idempotent", "chain"),
    "catalan": ConstraintSet.of("conservative", "commutative"),
}

MINIMUM_SIZE = {"cic": 2, "ic": 2, "catalan": 1}


def _count(values) -> int:
    return sum(1 for _ in values)


ARITHMETIC: Dict[str, Dict[str, Callable[[int], int]]] = {
    "cic": {
        "formula": count_cic,
        "enumerate": lambda n: _count(enumerate_codes(n, commutative_only=True)),
    },
    "ic": {
        "formula": count_ic_formula,
        "recurrence": count_ic_recurrence,
        "closed": count_ic_closed,
        "enumerate": lambda n: _count(enumerate_codes(n)),
    },
    "catalan": {
        "formula": catalan_count,
        "recurrence": catalan_by_convolution,
        "enumerate": lambda n: _count(enumerate_catalan(n)),
    },
}


@dataclass
class CensusRow:
    """The counts of one size; None where a method does not apply."""

    size: int
    values: Dict[str, Optional[int]] = field(default_factory=dict)

    def mismatches(self) -> List[Tuple[str, str]]:
        """Return the pairs of methods that disagree."""
        known = [(m, v) for m, v in self.values.items() if v is not None]
        return [
            (first, second)
            for i, (first, first_value) in enumerate(known)
            for second, second_value in known[i + 1 :]
            if first_value != second_value
        ]


@dataclass
class CensusReport:
    """Counts of one class of algebras by several methods."""

    census_class: str
    methods: List[str]
    rows: List[CensusRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Return True when all available methods agree on every size."""
        return not self.mismatches()

    def mismatches(self) -> List[Tuple[int, str, str]]:
        """Return (size, method, method) for every disagreement."""
        return [(row.size, a, b) for row in self.rows for a, b in row.mismatches()]

    def to_table(self) -> pa.Table:
        """Return the census as an Arrow table with one column per method."""
        columns: Dict[str, Any] = {"size": pa.array([row.size for row in self.rows], pa.int64())}
        for method in self.methods:
            columns[method] = pa.array([row.values.get(method) for row in self.rows], pa.int64())
        return pa.table(columns)

    def to_data(self) -> Dict[str, Any]:
        """Convert to JSON object."""
        return {
            "class": self.census_class,
            "methods": self.methods,
            "rows": [dict(size=row.size, **row.values) for row in self.rows],
            "ok": self.ok,
        }

    def format_text(self) -> str:
        """Return the census as an aligned text table."""
        header = ["size"] + self.methods
        body = [
            [str(row.size)]
            + ["-" if row.values.get(m) is None else str(row.values[m]) for m in self.methods]
            for row in self.rows
        ]
        widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
        return "\n".join(
            "  ".join(cell.rjust(width) for cell, width in zip(line, widths))
            for line in [header] + body
        )


def census(
    census_class: str,
    sizes: Sequence[int],
    methods: Sequence[str],
    max_brute_size: int = 6,
    jobs: int = 1,
) -> CensusReport:
    """Count the algebras of a class at every size with every requested method.

    Brute force above max_brute_size is skipped with a warning.
    """
    if census_class not in CLASSES:
        raise ValueError(f"unknown class {census_class}")
    for method in methods:
        if method not in METHODS:
            raise ValueError(f"unknown method {method}")
    report = CensusReport(census_class, list(methods))
    for n in sizes:
        row = CensusRow(n)
        for method in methods:
            row.values[method] = _value(census_class, method, n, max_brute_size, jobs)
        for first, second in row.mismatches():
            logger.warning(
                "%s census of size %s: %s gives %s, %s gives %s",
                census_class,
                n,
                first,
                row.values[first],
                second,
                row.values[second],
            )
        report.rows.append(row)
    return report


def _value(census_class: str, method: str, n: int, max_brute_size: int, jobs: int) -> Optional[int]:
    if n < MINIMUM_SIZE[census_class]:
        return None
    if method == "bruteforce":
        if n > max_brute_size:
            logger.warning("skipping brute force at size %s above %s", n, max_brute_size)
            return None
        return len(brute_force(n, BRUTE_FORCE_CONSTRAINTS[census_class], max_brute_size, jobs))
    function = ARITHMETIC[census_class].get(method)
    if function is None:
        return None
    return function(n)


def write_table(table: pa.Table, path: Union[str, Path]):
    """Write a table as Parquet or CSV by file suffix, and as Arrow IPC otherwise."""
    path = Path(path)
    if path.suffix == ".parquet":
        parquet.write_table(table, str(path))
    elif path.suffix == ".csv":
        arrow_csv.write_csv(table, str(path))
    else:
        feather.write_feather(table, str(path))
