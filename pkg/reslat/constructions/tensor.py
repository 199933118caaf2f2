"""Commutative idempotent chains glued from an odd Sugihara skeleton and fiber chains."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List

from reslat.base import CHAIN, FinAlgebra, SkeletonDecomposition
from reslat.constructions.checks import self_check
from reslat.core.lattice import chain_sequence, relabel
from reslat.core.properties import is_commutative, is_idempotent, is_odd_sugihara
from reslat.core.validation import ensure_residuals
from reslat.exceptions import BadFibers, BadSkeleton


def _is_commutative_idempotent(algebra: FinAlgebra) -> bool:
    return is_commutative(algebra) and is_idempotent(algebra)


def tensor(decomposition: SkeletonDecomposition) -> FinAlgebra:
    """Build the commutative idempotent chain S⊗X of a skeleton decomposition.

    The carrier is ordered by skeleton point first and fiber position second.
    For x over a and y over b:

        x·y = x∧y if a = b ≤ 1, x∨y if 1 < a = b, x if ab = a ≠ b, y if ab = b ≠ a
        x→y = ¬a∨y if x ≤ y, ¬a∧y otherwise

    where ¬a is the top of the fiber over ¬a.
    """
    skeleton = decomposition.skeleton
    if not is_odd_sugihara(skeleton):
        raise BadSkeleton("the skeleton is not a totally ordered odd Sugihara monoid")
    if not skeleton.is_chain_tagged:
        skeleton = relabel(skeleton, chain_sequence(skeleton))
    skeleton = ensure_residuals(skeleton)
    fibers = decomposition.fibers
    if len(fibers) != skeleton.n:
        raise BadFibers(f"{len(fibers)} fibers for {skeleton.n} skeleton points")
    if any(length < 1 for length in fibers):
        raise BadFibers("every fiber contains at least its skeleton point")

    point_of: List[int] = []
    top: List[int] = []
    for point, length in enumerate(fibers):
        point_of.extend([point] * length)
        top.append(len(point_of) - 1)
    n = len(point_of)
    unit = skeleton.unit

    def multiply(x: int, y: int) -> int:
        a, b = point_of[x], point_of[y]
        if a == b:
            return min(x, y) if skeleton.le(a, unit) else max(x, y)
        return x if skeleton.mul(a, b) == a else y

    def implies(x: int, y: int) -> int:
        negation = top[skeleton.neg(point_of[x])]
        return max(negation, y) if x <= y else min(negation, y)

    elements = range(n)
    algebra = FinAlgebra(
        n=n,
        unit=top[unit],
        prod=[[multiply(x, y) for y in elements] for x in elements],
        leq=CHAIN,
        ld=[[implies(x, c) for c in elements] for x in elements],
        rd=[[implies(y, c) for y in elements] for c in elements],
    )
    return self_check("tensor", algebra, extra=_is_commutative_idempotent)

