"""Catalan sums of finite commutative conservative residuated lattices.

In a commutative conservative algebra the monoidal preorder is a total order
and the product is its minimum, so an algebra is fully described by its lattice
order and the ⊑-rank of every element. The sum A ⊞ B is ordered by
≤_A ∪ ≤_B ∪ ({⊥_A} × B) ∪ (A × ↑1_B) and ranked by {⊥_A} ⊕ ⊑_B ⊕ ⊑_(A∖{⊥_A}).
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Generator, List, Sequence, Tuple

from reslat.base import FinAlgebra, Matrix
from reslat.constructions.checks import self_check
from reslat.core.lattice import linear_extension, normalise_order, relabel
from reslat.core.properties import is_commutative, is_conservative
from reslat.core.structure import monoidal_preorder
from reslat.core.validation import complete_residuals
from reslat.exceptions import NoAtom, SizeTooSmall, WrongClass

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Shape:
    leq: Matrix
    rank: Tuple[int, ...]
    unit: int

    @property
    def n(self) -> int:
        return len(self.rank)

    @property
    def bottom(self) -> int:
        return self.rank.index(0)

    def algebra(self) -> FinAlgebra:
        elements = range(self.n)
        return normalise_order(
            FinAlgebra(
                n=self.n,
                unit=self.unit,
                prod=[
                    [x if self.rank[x] <= self.rank[y] else y for y in elements]
                    for x in elements
                ],
                leq=self.leq,
            )
        )


def _shape(algebra: FinAlgebra) -> _Shape:
    preorder = monoidal_preorder(algebra)
    rank = tuple(
        sum(1 for y in algebra.elements if y != x and preorder.leq(y, x))
        for x in algebra.elements
    )
    return _Shape(algebra.order, rank, algebra.unit)


def _sum(first: _Shape, second: _Shape) -> _Shape:
    size = first.n
    n = size + second.n
    bottom = first.bottom
    second_unit = second.unit

    def le(x: int, y: int) -> bool:
        if x < size and y < size:
            return first.leq[x][y]
        if x >= size and y >= size:
            return second.leq[x - size][y - size]
        if x < size:
            return x == bottom or second.leq[second_unit][y - size]
        return False

    rank = [0] * n
    for x in range(size):
        if x != bottom:
            rank[x] = first.rank[x] + second.n
    for y in range(second.n):
        rank[size + y] = 1 + second.rank[y]
    unit = first.unit if size > 1 else size + second_unit
    leq = tuple(tuple(le(x, y) for y in range(n)) for x in range(n))
    return _Shape(leq, tuple(rank), unit)


def _require_class(algebra: FinAlgebra, operation: str):
    if not (is_conservative(algebra) and is_commutative(algebra)):
        raise WrongClass(f"{operation} requires a commutative conservative algebra")


def catalan_sum(first: FinAlgebra, second: FinAlgebra) -> FinAlgebra:
    """Return the Catalan sum of two finite commutative conservative residuated lattices.

    Indices of the first summand come before those of the second. The result
    is relabelled along the bottom-up linear extension of its order.
    """
    _require_class(first, "catalan_sum")
    _require_class(second, "catalan_sum")
    shape = _sum(_shape(first), _shape(second))
    algebra = shape.algebra()
    algebra = relabel(algebra, linear_extension(algebra))
    return self_check("catalan_sum", complete_residuals(algebra))


def _part(algebra: FinAlgebra, rank: Sequence[int], subset: List[int]) -> FinAlgebra:
    index = {x: i for i, x in enumerate(subset)}
    unit = max(subset, key=lambda x: rank[x])
    part = normalise_order(
        FinAlgebra(
            n=len(subset),
            unit=index[unit],
            prod=[[index[algebra.mul(x, y)] for y in subset] for x in subset],
            leq=[[algebra.le(x, y) for y in subset] for x in subset],
        )
    )
    return complete_residuals(relabel(part, linear_extension(part)))


def catalan_decompose(algebra: FinAlgebra) -> Tuple[FinAlgebra, FinAlgebra]:
    """Split a commutative conservative residuated lattice into its two Catalan summands.

    The second summand is the lattice up-set of the unique ⊑-atom, the first is
    the rest.
    """
    _require_class(algebra, "catalan_decompose")
    if algebra.n < 2:
        raise WrongClass("catalan_decompose requires at least two elements")
    rank = _shape(algebra).rank
    atoms = [x for x in algebra.elements if rank[x] == 1]
    if len(atoms) != 1:
        raise NoAtom()
    atom = atoms[0]
    upper = [x for x in algebra.elements if algebra.le(atom, x)]
    lower = [x for x in algebra.elements if not algebra.le(atom, x)]
    return _part(algebra, rank, lower), _part(algebra, rank, upper)


@lru_cache(maxsize=None)
def _shapes(n: int) -> Tuple[_Shape, ...]:
    if n == 1:
        return (_Shape(((True,),), (0,), 0),)
    result = []
    for k in range(1, n):
        for first in _shapes(k):
            for second in _shapes(n - k):
                result.append(_sum(first, second))
    logger.debug("built %s Catalan shapes of size %s", len(result), n)
    return tuple(result)


def enumerate_catalan(n: int) -> Generator[FinAlgebra, None, None]:
    """Yield every Catalan algebra of size n once, up to isomorphism.

    The algebras carry no residual tables; complete_residuals adds them.
    Raises SizeTooSmall when n < 1.
    """
    if n < 1:
        raise SizeTooSmall(n, 1)
    for shape in _shapes(n):
        yield shape.algebra()


def catalan_label(algebra: FinAlgebra) -> str:
    """Return the binary-tree word of a Catalan algebra, "o" for the trivial one."""
    if algebra.n == 1:
        return "o"
    first, second = catalan_decompose(algebra)
    return f"({catalan_label(first)}{catalan_label(second)})"
