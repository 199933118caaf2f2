"""Brute-force congruence lattices of small algebras."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Dict, List, Optional, Set, Tuple

from reslat.base import FinAlgebra
from reslat.core.validation import ensure_residuals
from reslat.exceptions import TooLarge

logger = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 7

Partition = Tuple[Tuple[int, ...], ...]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        self.parent[max(root_x, root_y)] = min(root_x, root_y)
        return True

    def partition(self) -> Partition:
        blocks: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return tuple(sorted(tuple(block) for block in blocks.values()))


def _close(algebra: FinAlgebra, pairs: List[Tuple[int, int]]) -> Partition:
    operations = [
        algebra.meet,
        algebra.join,
        algebra.mul,
        algebra.left_div,
        algebra.right_div,
    ]
    classes = _UnionFind(algebra.n)
    for x, y in pairs:
        classes.union(x, y)
    changed = True
    while changed:
        changed = False
        for block in classes.partition():
            for x, y in zip(block, block[1:]):
                for z in algebra.elements:
                    for operation in operations:
                        if classes.union(operation(x, z), operation(y, z)):
                            changed = True
                        if classes.union(operation(z, x), operation(z, y)):
                            changed = True
    return classes.partition()


def principal_congruence(algebra: FinAlgebra, x: int, y: int) -> Partition:
    """Return the least congruence identifying x and y."""
    return _close(ensure_residuals(algebra), [(x, y)])


def join_partitions(first: Partition, second: Partition) -> Partition:
    """Return the join of two equivalence relations given as partitions."""
    n = sum(len(block) for block in first)
    classes = _UnionFind(n)
    for block in first + second:
        for x, y in zip(block, block[1:]):
            classes.union(x, y)
    return classes.partition()


def _sort_key(partition: Partition):
    return (-len(partition), partition)


def congruences(algebra: FinAlgebra, max_size: int = DEFAULT_MAX_SIZE) -> List[Partition]:
    """Return all congruences of an algebra as sorted lists of blocks.

    The list starts with the identity relation Δ and ends with the total relation ∇.

    Raises TooLarge when the algebra has more than max_size elements.
    """
    if algebra.n > max_size:
        raise TooLarge(algebra.n, max_size)
    algebra = ensure_residuals(algebra)
    principal: Set[Partition] = {
        principal_congruence(algebra, x, y)
        for x in algebra.elements
        for y in algebra.elements
        if x < y
    }
    found: Set[Partition] = {tuple((x,) for x in algebra.elements)}
    found.update(principal)
    frontier = set(principal)
    while frontier:
        joined = {
            join_partitions(first, second) for first in frontier for second in principal
        }
        frontier = joined - found
        found.update(frontier)
    logger.debug("found %s congruences on %s elements", len(found), algebra.n)
    return sorted(found, key=_sort_key)


def atoms(partitions: List[Partition]) -> List[Partition]:
    """Return the minimal partitions above the identity relation."""
    non_trivial = [p for p in partitions if any(len(block) > 1 for block in p)]
    return [
        p for p in non_trivial if not any(q != p and refines(q, p) for q in non_trivial)
    ]


def refines(finer: Partition, coarser: Partition) -> bool:
    """Return True when every block of finer lies inside a block of coarser."""
    block_of = {x: i for i, block in enumerate(coarser) for x in block}
    return all(len({block_of[x] for x in block}) == 1 for block in finer)


def monolith(
    algebra: FinAlgebra, max_size: int = DEFAULT_MAX_SIZE
) -> Optional[Partition]:
    """Return the unique atom of the congruence lattice, if there is one."""
    found = atoms(congruences(algebra, max_size))
    if len(found) == 1:
        return found[0]
    return None


def is_subdirectly_irreducible(
    algebra: FinAlgebra, max_size: int = DEFAULT_MAX_SIZE
) -> bool:
    """Return True when the congruence lattice has a unique atom."""
    return monolith(algebra, max_size) is not None


def is_simple(algebra: FinAlgebra, max_size: int = DEFAULT_MAX_SIZE) -> bool:
    """Return True for a nontrivial algebra whose only congruences are Δ and ∇."""
    return algebra.n > 1 and len(congruences(algebra, max_size)) == 2
