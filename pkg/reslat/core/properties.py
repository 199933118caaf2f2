"""Structural flags computed by exhaustive table scans."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.base import FinAlgebra, PropertyFlags
from reslat.core.lattice import is_totally_ordered
from reslat.core.validation import ensure_residuals


def is_idempotent(algebra: FinAlgebra) -> bool:
    """Return True when x·x = x for every x."""
    return all(algebra.mul(x, x) == x for x in algebra.elements)


def is_commutative(algebra: FinAlgebra) -> bool:
    """Return True when x·y = y·x for all x and y."""
    return all(
        algebra.mul(x, y) == algebra.mul(y, x)
        for x in algebra.elements
        for y in algebra.elements
        if x < y
    )


def is_conservative(algebra: FinAlgebra) -> bool:
    """Return True when x·y ∈ {x, y} for all x and y."""
    return all(
        algebra.mul(x, y) in (x, y) for x in algebra.elements for y in algebra.elements
    )


def is_odd_sugihara(algebra: FinAlgebra) -> bool:
    """Return True for a totally ordered odd Sugihara monoid.

    The algebra must be a commutative idempotent chain in which ¬x = x\\1 is an
    involution fixing the unit.
    """
    if not (
        is_totally_ordered(algebra)
        and is_idempotent(algebra)
        and is_commutative(algebra)
    ):
        return False
    algebra = ensure_residuals(algebra)
    if algebra.neg(algebra.unit) != algebra.unit:
        return False
    return all(algebra.neg(algebra.neg(x)) == x for x in algebra.elements)


def properties(algebra: FinAlgebra) -> PropertyFlags:
    """Compute the structural flags of a validated algebra."""
    return PropertyFlags(
        idempotent=is_idempotent(algebra),
        commutative=is_commutative(algebra),
        conservative=is_conservative(algebra),
        totally_ordered=is_totally_ordered(algebra),
        odd_sugihara=is_odd_sugihara(algebra),
    )
