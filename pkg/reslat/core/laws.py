"""Quantified laws of idempotent residuated lattices, checked exhaustively.

Every suite returns a CheckReport whose axiom names describe the law that failed.
The suites assume the class stated in their docstring and do not check it.
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from itertools import combinations
from typing import Callable

from reslat.base import CheckReport, FinAlgebra
from reslat.core.properties import is_conservative
from reslat.core.structure import (
    bounded_subalgebra,
    generated_subalgebra,
    monoidal_preorder,
)
from reslat.core.validation import ensure_residuals


def _negative(algebra: FinAlgebra, x: int) -> bool:
    return algebra.le(x, algebra.unit)


def _positive(algebra: FinAlgebra, x: int) -> bool:
    return algebra.le(algebra.unit, x)


def different_signs(algebra: FinAlgebra, x: int, y: int) -> bool:
    """Return True unless x and y lie in the same cone."""
    both_negative = _negative(algebra, x) and _negative(algebra, y)
    both_positive = _positive(algebra, x) and _positive(algebra, y)
    return not (both_negative or both_positive)


def check_idempotent_laws(algebra: FinAlgebra) -> CheckReport:
    """Check the basic laws of an idempotent residuated lattice.

    x∧y ≤ xy ≤ x∨y; 1 ≤ xy implies xy = x∨y; xy ≤ 1 implies xy = x∧y; products
    inside a cone are meets or joins; the negative cone with x⇒y = (x\\y)∧1 is
    a Brouwerian algebra.
    """
    algebra = ensure_residuals(algebra)
    report = CheckReport()
    le, unit = algebra.le, algebra.unit
    for x in algebra.elements:
        for y in algebra.elements:
            xy = algebra.mul(x, y)
            meet, join = algebra.meet(x, y), algebra.join(x, y)
            if not (le(meet, xy) and le(xy, join)):
                report.add("product between meet and join", x, y)
            if le(unit, xy) and xy != join:
                report.add("positive product is join", x, y)
            if le(xy, unit) and xy != meet:
                report.add("negative product is meet", x, y)
            if _negative(algebra, x) and _negative(algebra, y) and xy != meet:
                report.add("negative cone product", x, y)
            if _positive(algebra, x) and _positive(algebra, y) and xy != join:
                report.add("positive cone product", x, y)
    cone = [x for x in algebra.elements if _negative(algebra, x)]
    for x in cone:
        for y in cone:
            arrow = algebra.meet(algebra.left_div(x, y), unit)
            for z in cone:
                if le(algebra.meet(x, z), y) != le(z, arrow):
                    report.add("negative cone is brouwerian", x, y, z)
    return report


def check_cone_chain(algebra: FinAlgebra) -> CheckReport:
    """Check that ↓1 ∪ ↑1 is totally ordered in a conservative algebra."""
    report = CheckReport()
    cones = [
        x
        for x in algebra.elements
        if _negative(algebra, x) or _positive(algebra, x)
    ]
    for x, y in combinations(cones, 2):
        if not (algebra.le(x, y) or algebra.le(y, x)):
            report.add("cones form a chain", x, y)
    return report


def check_chain_conservative(algebra: FinAlgebra) -> CheckReport:
    """Check that an idempotent chain is conservative with product given by ⊑."""
    report = CheckReport()
    if not is_conservative(algebra):
        report.add("conservative")
    preorder = monoidal_preorder(algebra)
    for x in algebra.elements:
        for y in algebra.elements:
            expected = x if preorder.leq(x, y) else y
            if algebra.mul(x, y) != expected:
                report.add("product from monoidal preorder", x, y)
    return report


def check_central_pairs(algebra: FinAlgebra) -> CheckReport:
    """Check that every element of an idempotent chain is central or in one pair.

    A noncommuting pair has members of different signs that are either
    mutually ⊑-related or ⊑-incomparable.
    """
    report = CheckReport()
    preorder = monoidal_preorder(algebra)
    for x in algebra.elements:
        partners = [
            y for y in algebra.elements if algebra.mul(x, y) != algebra.mul(y, x)
        ]
        if not partners:
            continue
        if len(partners) > 1:
            report.add("unique noncommuting partner", x, *partners)
            continue
        y = partners[0]
        if not different_signs(algebra, x, y):
            report.add("pair has different signs", x, y)
        if not (preorder.equivalent(x, y) or preorder.incomparable(x, y)):
            report.add("pair is equivalent or incomparable", x, y)
    return report


def check_lacing(algebra: FinAlgebra) -> CheckReport:
    """Check that a and a♯ have the same ⊑-relations to every other element."""
    report = CheckReport()
    preorder = monoidal_preorder(algebra)
    for a in algebra.elements:
        sharp = preorder.sharp(a)
        for x in algebra.elements:
            if x in (a, sharp):
                continue
            if preorder.leq(a, x) != preorder.leq(sharp, x):
                report.add("lacing above", a, sharp, x)
            if preorder.leq(x, a) != preorder.leq(x, sharp):
                report.add("lacing below", a, sharp, x)
    return report


def check_conservative_equation(algebra: FinAlgebra) -> CheckReport:
    """Check 1 = ((xy↔x)∧1) ∨ ((xy↔y)∧1) on a commutative algebra."""
    algebra = ensure_residuals(algebra)
    report = CheckReport()
    unit = algebra.unit

    def both_ways(u: int, v: int) -> int:
        return algebra.meet(algebra.left_div(u, v), algebra.left_div(v, u))

    for x in algebra.elements:
        for y in algebra.elements:
            xy = algebra.mul(x, y)
            value = algebra.join(
                algebra.meet(both_ways(xy, x), unit),
                algebra.meet(both_ways(xy, y), unit),
            )
            if value != unit:
                report.add("conservative equation", x, y)
    return report


def generation_bound(m: int) -> int:
    """Return the bound on the subalgebra generated by m elements of a commutative chain."""
    return 3 * m + 1


def check_generation_bound(
    algebra: FinAlgebra,
    max_seed: int = 3,
    bound: Callable[[int], int] = generation_bound,
) -> CheckReport:
    """Check the size of every subalgebra generated by at most max_seed elements.

    Applies to commutative idempotent chains. The generated subalgebra must lie
    inside bounded_subalgebra and have at most bound(m) elements.
    """
    algebra = ensure_residuals(algebra)
    report = CheckReport()
    for m in range(1, max_seed + 1):
        for seed in combinations(algebra.elements, m):
            generated = generated_subalgebra(algebra, seed)
            if len(generated) > bound(m):
                report.add("generation bound", *seed)
            if not generated <= bounded_subalgebra(algebra, seed):
                report.add("bounded subalgebra", *seed)
    return report
