"""Finite totally ordered odd Sugihara monoids."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.base import CHAIN, FinAlgebra
from reslat.constructions.checks import self_check
from reslat.core.properties import is_odd_sugihara
from reslat.exceptions import EvenSize, SizeTooSmall


def sugihara_from_involution(n: int) -> FinAlgebra:
    """Build the odd Sugihara chain on 0..n-1 with involution ¬i = n-1-i.

    x·y is x∧y when x ≤ ¬y and x∨y otherwise; x→y is ¬x∨y when x ≤ y and
    ¬x∧y otherwise.
    """
    if n < 1:
        raise SizeTooSmall(n, 1)
    if n % 2 == 0:
        raise EvenSize(n)
    elements = range(n)

    def neg(x: int) -> int:
        return n - 1 - x

    def multiply(x: int, y: int) -> int:
        return min(x, y) if x <= neg(y) else max(x, y)

    def implies(x: int, y: int) -> int:
        return max(neg(x), y) if x <= y else min(neg(x), y)

    algebra = FinAlgebra(
        n=n,
        unit=(n - 1) // 2,
        prod=[[multiply(x, y) for y in elements] for x in elements],
        leq=CHAIN,
        ld=[[implies(x, c) for c in elements] for x in elements],
        rd=[[implies(y, c) for y in elements] for c in elements],
    )
    return self_check("sugihara_from_involution", algebra, extra=is_odd_sugihara)


def sugihara_chain(k: int) -> FinAlgebra:
    """Return the truncation -k..k of the integer Sugihara monoid; label v has index v + k."""
    if k < 0:
        raise SizeTooSmall(k, 0)
    return sugihara_from_involution(2 * k + 1)
