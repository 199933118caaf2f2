"""Check the residuated-lattice axioms and complete missing residual tables."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import List, Optional

from reslat.base import CheckReport, FinAlgebra
from reslat.core.lattice import check_lattice, check_partial_order, greatest
from reslat.exceptions import DimensionMismatch, IndexOutOfRange, NotResiduable

logger = logging.getLogger(__name__)


def check_dimensions(algebra: FinAlgebra):
    """Raise when a table has the wrong shape or holds a value outside the carrier."""
    n = algebra.n
    if n < 1:
        raise DimensionMismatch("carrier", 1, n)
    if not 0 <= algebra.unit < n:
        raise IndexOutOfRange("unit", algebra.unit, n)
    if not algebra.is_chain_tagged:
        _check_shape("leq", algebra.leq, n)  # type: ignore[arg-type]
    for name in ["prod", "ld", "rd"]:
        rows = getattr(algebra, name)
        if rows is None:
            continue
        _check_shape(name, rows, n)
        for row in rows:
            for value in row:
                if not isinstance(value, int) or not 0 <= value < n:
                    raise IndexOutOfRange(name, value, n)


def _check_shape(name: str, rows, n: int):
    if len(rows) != n:
        raise DimensionMismatch(name, n, len(rows))
    for row in rows:
        if len(row) != n:
            raise DimensionMismatch(f"a row of {name}", n, len(row))


def validate(algebra: FinAlgebra) -> CheckReport:
    """Check the lattice, monoid and residuation axioms of an algebra.

    When residual tables are present, the three-way equivalence
    x·y ≤ c ⟺ y ≤ x\\c ⟺ x ≤ c/y is checked for every triple. Otherwise the
    existence of both residuals is checked.

    Raises DimensionMismatch or IndexOutOfRange for malformed tables.
    """
    check_dimensions(algebra)
    report = CheckReport()
    if check_partial_order(algebra, report):
        check_lattice(algebra, report)
    _check_monoid(algebra, report)
    if algebra.has_residuals:
        _check_residuation(algebra, report)
    else:
        _check_residuals_exist(algebra, report)
    if not report.ok:
        logger.debug("validation found %s violations", len(report.violations))
    return report


def _check_monoid(algebra: FinAlgebra, report: CheckReport):
    mul = algebra.mul
    unit = algebra.unit
    for x in algebra.elements:
        if mul(unit, x) != x or mul(x, unit) != x:
            report.add("identity", x)
    for x in algebra.elements:
        for y in algebra.elements:
            xy = mul(x, y)
            for z in algebra.elements:
                if mul(xy, z) != mul(x, mul(y, z)):
                    report.add("associativity", x, y, z)


def _check_residuation(algebra: FinAlgebra, report: CheckReport):
    le = algebra.le
    for x in algebra.elements:
        for y in algebra.elements:
            xy = algebra.mul(x, y)
            for c in algebra.elements:
                below = le(xy, c)
                if below != le(y, algebra.left_div(x, c)) or below != le(
                    x, algebra.right_div(c, y)
                ):
                    report.add("residuation", x, y, c)


def _check_residuals_exist(algebra: FinAlgebra, report: CheckReport):
    le = algebra.le
    for x in algebra.elements:
        for c in algebra.elements:
            left = _left_candidates(algebra, x, c)
            best = greatest(algebra, left)
            if best is None:
                report.add("left residual", x, c)
            else:
                for y in algebra.elements:
                    if le(y, best) != (y in left):
                        report.add("left residuation", x, y, c)
            right = _right_candidates(algebra, c, x)
            best = greatest(algebra, right)
            if best is None:
                report.add("right residual", c, x)
            else:
                for y in algebra.elements:
                    if le(y, best) != (y in right):
                        report.add("right residuation", y, x, c)


def _left_candidates(algebra: FinAlgebra, x: int, c: int) -> List[int]:
    return [z for z in algebra.elements if algebra.le(algebra.mul(x, z), c)]


def _right_candidates(algebra: FinAlgebra, c: int, y: int) -> List[int]:
    return [z for z in algebra.elements if algebra.le(algebra.mul(z, y), c)]


def left_residual(algebra: FinAlgebra, x: int, c: int) -> Optional[int]:
    """Return max{z : x·z ≤ c}, or None when it does not exist."""
    return greatest(algebra, _left_candidates(algebra, x, c))


def right_residual(algebra: FinAlgebra, c: int, y: int) -> Optional[int]:
    """Return max{z : z·y ≤ c}, or None when it does not exist."""
    return greatest(algebra, _right_candidates(algebra, c, y))


def complete_residuals(algebra: FinAlgebra) -> FinAlgebra:
    """Compute both residual tables by scanning for the greatest candidate.

    Raises NotResiduable when a candidate set is empty or has no greatest element.
    """
    ld = []
    for x in algebra.elements:
        row = []
        for c in algebra.elements:
            value = left_residual(algebra, x, c)
            if value is None:
                raise NotResiduable("left", x, c)
            row.append(value)
        ld.append(row)
    rd = []
    for c in algebra.elements:
        row = []
        for y in algebra.elements:
            value = right_residual(algebra, c, y)
            if value is None:
                raise NotResiduable("right", y, c)
            row.append(value)
        rd.append(row)
    return algebra.with_residuals(ld, rd)


def ensure_residuals(algebra: FinAlgebra) -> FinAlgebra:
    """Return the algebra itself when it has residual tables, else complete them."""
    if algebra.has_residuals:
        return algebra
    return complete_residuals(algebra)
