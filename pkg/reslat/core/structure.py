"""Extract structure from an algebra: monoidal preorder, closures, skeleton, subalgebras."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Callable, FrozenSet, Iterable, List, Set, Tuple

from reslat.base import CHAIN, CheckReport, FinAlgebra, PreorderRel, Skeleton
from reslat.core.lattice import (
    chain_sequence,
    is_totally_ordered,
    normalise_order,
    relabel,
)
from reslat.core.properties import is_commutative, is_idempotent
from reslat.core.validation import ensure_residuals
from reslat.exceptions import (
    InvariantBreach,
    MissingResiduals,
    NotIdempotent,
    WrongClass,
)

logger = logging.getLogger(__name__)


def monoidal_preorder(algebra: FinAlgebra) -> PreorderRel:
    """Return the monoidal preorder x ⊑ y ⟺ x·y = x of an idempotent algebra."""
    for x in algebra.elements:
        if algebra.mul(x, x) != x:
            raise NotIdempotent(x)
    matrix = tuple(
        tuple(algebra.mul(x, y) == x for y in algebra.elements)
        for x in algebra.elements
    )
    preorder = PreorderRel(matrix)
    report = CheckReport()
    for x in algebra.elements:
        for y in algebra.elements:
            if not preorder.leq(x, y):
                continue
            for z in algebra.elements:
                if preorder.leq(y, z) and not preorder.leq(x, z):
                    report.add("transitive", x, y, z)
        if not preorder.leq(x, algebra.unit):
            report.add("unit is greatest", x)
        if not preorder.leq(algebra.bottom, x):
            report.add("bottom is least", x)
    if not report.ok:
        raise InvariantBreach("monoidal_preorder", report)
    return preorder


def gamma_closure(algebra: FinAlgebra, a: int) -> Tuple[int, ...]:
    """Return γ_a, the map x ↦ (a/x)\\a.

    The result is checked to be a closure operator.
    """
    if not algebra.has_residuals:
        raise MissingResiduals()
    gamma = tuple(
        algebra.left_div(algebra.right_div(a, x), a) for x in algebra.elements
    )
    report = CheckReport()
    for x in algebra.elements:
        if not algebra.le(x, gamma[x]):
            report.add("inflationary", x)
        if gamma[gamma[x]] != gamma[x]:
            report.add("idempotent closure", x)
        for y in algebra.elements:
            if algebra.le(x, y) and not algebra.le(gamma[x], gamma[y]):
                report.add("monotone closure", x, y)
    if not report.ok:
        raise InvariantBreach("gamma_closure", report)
    return gamma


def skeleton(algebra: FinAlgebra) -> Skeleton:
    """Split a commutative idempotent chain into its γ₁-skeleton and fibers.

    The skeleton is the subalgebra on the γ₁-closed elements, relabelled from
    bottom to top. The fiber over c is the interval of elements x with γ₁(x) = c.
    """
    if not (
        is_totally_ordered(algebra)
        and is_idempotent(algebra)
        and is_commutative(algebra)
    ):
        raise WrongClass("skeleton requires a commutative idempotent chain")
    algebra = ensure_residuals(algebra)
    gamma = gamma_closure(algebra, algebra.unit)
    sequence = chain_sequence(algebra)
    elements = tuple(x for x in sequence if gamma[x] == x)
    fibers = tuple(tuple(x for x in sequence if gamma[x] == c) for c in elements)
    logger.debug("skeleton has %s points over %s elements", len(elements), algebra.n)
    points = restrict(algebra, elements)
    if not points.is_chain_tagged:
        points = relabel(points, chain_sequence(points))
    return Skeleton(points, elements, fibers)


def _binary_operations(algebra: FinAlgebra) -> List[Callable[[int, int], int]]:
    return [
        algebra.meet,
        algebra.join,
        algebra.mul,
        algebra.left_div,
        algebra.right_div,
    ]


def generated_subalgebra(algebra: FinAlgebra, seed: Iterable[int]) -> FrozenSet[int]:
    """Return the least subuniverse containing seed and the unit."""
    algebra = ensure_residuals(algebra)
    operations = _binary_operations(algebra)
    current: Set[int] = set(seed) | {algebra.unit}
    while True:
        found = {
            operation(x, y)
            for operation in operations
            for x in current
            for y in current
        }
        if found <= current:
            return frozenset(current)
        current |= found


def bounded_subalgebra(algebra: FinAlgebra, seed: Iterable[int]) -> FrozenSet[int]:
    """Return the subuniverse built from the skeleton points and fibers of a seed.

    For a commutative idempotent chain and a seed Y this is the union of
    X'_c = (X_c ∩ Y) ∪ {c} over c in S' = {γ₁(y), ¬γ₁(y) : y ∈ Y} ∪ {1}. It
    contains generated_subalgebra(algebra, Y).
    """
    algebra = ensure_residuals(algebra)
    seed = set(seed)
    parts = skeleton(algebra)
    top_of = {x: c for c, fiber in zip(parts.elements, parts.fibers) for x in fiber}
    points = {algebra.unit}
    for y in seed:
        points.add(top_of[y])
        points.add(algebra.neg(top_of[y]))
    result = set(points)
    result.update(y for y in seed if top_of[y] in points)
    return frozenset(result)


def is_closed(algebra: FinAlgebra, subset: Iterable[int]) -> bool:
    """Return True when subset contains the unit and is closed under all operations."""
    subset = set(subset)
    if algebra.unit not in subset:
        return False
    operations = _binary_operations(algebra) if algebra.has_residuals else [
        algebra.meet,
        algebra.join,
        algebra.mul,
    ]
    return all(
        operation(x, y) in subset
        for operation in operations
        for x in subset
        for y in subset
    )


def restrict(algebra: FinAlgebra, subset: Iterable[int]) -> FinAlgebra:
    """Return the subalgebra on a closed subset, relabelled in index order.

    Raises WrongClass when the subset is not closed.
    """
    elements = sorted(set(subset))
    if not is_closed(algebra, elements):
        raise WrongClass(f"{elements} is not a subuniverse")
    index = {x: i for i, x in enumerate(elements)}

    def table(rows):
        if rows is None:
            return None
        return [[index[rows[x][y]] for y in elements] for x in elements]

    leq = CHAIN if algebra.is_chain_tagged else [
        [algebra.le(x, y) for y in elements] for x in elements
    ]
    return normalise_order(
        FinAlgebra(
            n=len(elements),
            unit=index[algebra.unit],
            prod=table(algebra.prod),
            leq=leq,
            ld=table(algebra.ld),
            rd=table(algebra.rd),
        )
    )


def opposite(algebra: FinAlgebra) -> FinAlgebra:
    """Return the algebra with the product x·y replaced by y·x."""
    prod = [[algebra.mul(y, x) for y in algebra.elements] for x in algebra.elements]
    ld = rd = None
    if algebra.has_residuals:
        ld = [
            [algebra.right_div(c, x) for c in algebra.elements]
            for x in algebra.elements
        ]
        rd = [
            [algebra.left_div(y, c) for y in algebra.elements]
            for c in algebra.elements
        ]
    return FinAlgebra(
        n=algebra.n, unit=algebra.unit, prod=prod, leq=algebra.leq, ld=ld, rd=rd
    )


def direct_product(first: FinAlgebra, second: FinAlgebra) -> FinAlgebra:
    """Return the componentwise product algebra, labelling (a, b) as a·|second| + b."""
    size = second.n
    pairs = [(a, b) for a in first.elements for b in second.elements]

    def label(a: int, b: int) -> int:
        return a * size + b

    def table(left: Callable[[int, int], int], right: Callable[[int, int], int]):
        return [
            [label(left(a, c), right(b, d)) for (c, d) in pairs] for (a, b) in pairs
        ]

    ld = rd = None
    if first.has_residuals and second.has_residuals:
        ld = table(first.left_div, second.left_div)
        rd = table(first.right_div, second.right_div)
    return normalise_order(
        FinAlgebra(
            n=first.n * second.n,
            unit=label(first.unit, second.unit),
            prod=table(first.mul, second.mul),
            leq=[
                [first.le(a, c) and second.le(b, d) for (c, d) in pairs]
                for (a, b) in pairs
            ],
            ld=ld,
            rd=rd,
        )
    )
