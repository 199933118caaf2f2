"""Order-theoretic helpers shared by the validators and the constructions."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List, Optional, Sequence

from reslat.base import CHAIN, CheckReport, FinAlgebra, Matrix


def check_partial_order(algebra: FinAlgebra, report: CheckReport) -> bool:
    """Report reflexivity, antisymmetry and transitivity violations.

    Returns True when no violation was found.
    """
    if algebra.is_chain_tagged:
        return True
    before = len(report.violations)
    elements = algebra.elements
    for x in elements:
        if not algebra.le(x, x):
            report.add("reflexivity", x)
    for x in elements:
        for y in elements:
            if x != y and algebra.le(x, y) and algebra.le(y, x):
                report.add("antisymmetry", x, y)
    for x in elements:
        for y in elements:
            if not algebra.le(x, y):
                continue
            for z in elements:
                if algebra.le(y, z) and not algebra.le(x, z):
                    report.add("transitivity", x, y, z)
    return len(report.violations) == before


def check_lattice(algebra: FinAlgebra, report: CheckReport) -> bool:
    """Report every pair that lacks a meet or a join."""
    if algebra.is_chain_tagged:
        return True
    before = len(report.violations)
    for x in algebra.elements:
        for y in algebra.elements:
            if y < x:
                continue
            if greatest(algebra, _lower_bounds(algebra, x, y)) is None:
                report.add("meet", x, y)
            if least(algebra, _upper_bounds(algebra, x, y)) is None:
                report.add("join", x, y)
    return len(report.violations) == before


def greatest(algebra: FinAlgebra, candidates: Sequence[int]) -> Optional[int]:
    """Return the greatest element of candidates, or None."""
    for z in candidates:
        if all(algebra.le(w, z) for w in candidates):
            return z
    return None


def least(algebra: FinAlgebra, candidates: Sequence[int]) -> Optional[int]:
    """Return the least element of candidates, or None."""
    for z in candidates:
        if all(algebra.le(z, w) for w in candidates):
            return z
    return None


def _lower_bounds(algebra: FinAlgebra, x: int, y: int) -> List[int]:
    return [z for z in algebra.elements if algebra.le(z, x) and algebra.le(z, y)]


def _upper_bounds(algebra: FinAlgebra, x: int, y: int) -> List[int]:
    return [z for z in algebra.elements if algebra.le(x, z) and algebra.le(y, z)]


def is_totally_ordered(algebra: FinAlgebra) -> bool:
    """Return True when every two elements are comparable."""
    if algebra.is_chain_tagged:
        return True
    return all(
        algebra.le(x, y) or algebra.le(y, x)
        for x in algebra.elements
        for y in algebra.elements
    )


def chain_sequence(algebra: FinAlgebra) -> List[int]:
    """Return the elements of a totally ordered algebra from bottom to top."""
    if algebra.is_chain_tagged:
        return list(algebra.elements)
    return sorted(
        algebra.elements,
        key=lambda x: sum(1 for y in algebra.elements if algebra.le(y, x)),
    )


def linear_extension(algebra: FinAlgebra) -> List[int]:
    """Return the bottom-up linear extension of the order that prefers small indices."""
    remaining = set(algebra.elements)
    result: List[int] = []
    while remaining:
        minimal = min(
            x for x in remaining if not any(algebra.lt(y, x) for y in remaining)
        )
        result.append(minimal)
        remaining.remove(minimal)
    return result


def index_order_matrix(n: int) -> Matrix:
    """Return the matrix of the index order on 0..n-1."""
    return tuple(tuple(x <= y for y in range(n)) for x in range(n))


def normalise_order(algebra: FinAlgebra) -> FinAlgebra:
    """Replace a matrix order that equals the index order by the CHAIN tag."""
    if algebra.is_chain_tagged or algebra.leq != index_order_matrix(algebra.n):
        return algebra
    return FinAlgebra(
        n=algebra.n,
        unit=algebra.unit,
        prod=algebra.prod,
        leq=CHAIN,
        ld=algebra.ld,
        rd=algebra.rd,
    )


def relabel(algebra: FinAlgebra, order: Sequence[int]) -> FinAlgebra:
    """Relabel an algebra so that new index i is old element order[i]."""
    if sorted(order) != list(algebra.elements):
        raise ValueError("relabelling must be a permutation of the carrier")
    new_index = {old: new for new, old in enumerate(order)}

    def table(rows):
        if rows is None:
            return None
        return [[new_index[rows[x][y]] for y in order] for x in order]

    leq = [[algebra.le(x, y) for y in order] for x in order]
    return normalise_order(
        FinAlgebra(
            n=algebra.n,
            unit=new_index[algebra.unit],
            prod=table(algebra.prod),
            leq=leq,
            ld=table(algebra.ld),
            rd=table(algebra.rd),
        )
    )
