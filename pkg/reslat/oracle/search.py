"""Exhaustive search for finite residuated lattices satisfying a set of constraints.

The search fixes a lattice order and a unit, then fills the product table cell
by cell. A partial table is pruned as soon as it breaks monotonicity, join
preservation in either argument or associativity. A finite lattice-ordered
monoid is residuated exactly when its product preserves all joins in both
arguments, including the empty join, so residuals are computed afterwards.
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Generator, List, Optional, Tuple, Union

from reslat.base import (
    CHAIN,
    CanonicalForm,
    CheckReport,
    Constraint,
    ConstraintSet,
    FinAlgebra,
    Matrix,
)
from reslat.core.lattice import check_lattice, normalise_order
from reslat.core.validation import complete_residuals, validate
from reslat.exceptions import InvariantBreach, SizeTooSmall, TooLarge
from reslat.oracle.canonical import canonical, canonical_representative

logger = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 6

Order = Union[str, Matrix]
Cell = Tuple[int, int]


@dataclass(frozen=True)
class _Task:
    """One branch of the search: a lattice order, and a unit unless ranks are searched."""

    n: int
    leq: Order
    unit: Optional[int]
    flags: FrozenSet[Constraint]


def brute_force(
    n: int,
    constraints: ConstraintSet,
    max_size: int = DEFAULT_MAX_SIZE,
    jobs: int = 1,
) -> List[FinAlgebra]:
    """Return every residuated lattice of size n satisfying the constraints once.

    Models are canonical representatives sorted by canonical form. The search is
    split over lattice orders and units; with jobs > 1 the branches run in a
    process pool and are merged in task order.

    Raises TooLarge when n exceeds max_size and SizeTooSmall when n < 1.
    """
    if n < 1:
        raise SizeTooSmall(n, 1)
    if n > max_size:
        raise TooLarge(n, max_size)
    tasks = _tasks(n, constraints)
    logger.debug("searching size %s with %s in %s branches", n, constraints.names(), len(tasks))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_run_task, tasks))
    else:
        results = [_run_task(task) for task in tasks]

    models: Dict[CanonicalForm, FinAlgebra] = {}
    for found in results:
        for algebra in found:
            form = canonical(algebra)
            if form not in models:
                models[form] = canonical_representative(algebra)
    logger.info("found %s models of size %s with %s", len(models), n, ",".join(constraints.names()))
    return [models[form] for form in sorted(models)]


def _tasks(n: int, constraints: ConstraintSet) -> List[_Task]:
    flags = constraints.flags
    if n == 1:
        return [_Task(1, CHAIN, 0, flags)]
    if Constraint.CHAIN in constraints:
        return [_Task(n, CHAIN, unit, flags) for unit in range(1, n)]
    lattices = lattice_orders(n)
    if Constraint.CONSERVATIVE in constraints and Constraint.COMMUTATIVE in constraints:
        return [_Task(n, leq, None, flags) for leq in lattices]
    return [_Task(n, leq, unit, flags) for leq in lattices for unit in range(1, n)]


def _run_task(task: _Task) -> List[FinAlgebra]:
    if task.unit is None:
        tables = _rank_tables(task)
    else:
        tables = _ProductSearch(task).solve()
    result = []
    for unit, prod in tables:
        algebra = complete_residuals(
            normalise_order(FinAlgebra(n=task.n, unit=unit, prod=prod, leq=task.leq))
        )
        report = validate(algebra)
        if not report.ok:
            raise InvariantBreach("brute_force", report)
        result.append(algebra)
    return result


def lattice_orders(n: int) -> List[Matrix]:
    """Return one naturally labelled lattice order of size n per isomorphism class.

    Natural labelling means that x ≤ y implies x ≤ y as integers, with 0 the
    bottom and n-1 the top.
    """
    if n < 1:
        raise SizeTooSmall(n, 1)
    inner = list(range(1, n - 1))
    pairs = list(combinations(inner, 2))
    seen: Dict[Tuple[int, ...], Matrix] = {}
    for mask in range(2 ** len(pairs)):
        related = {pair for bit, pair in enumerate(pairs) if mask >> bit & 1}

        def le(x: int, y: int, related=related) -> bool:
            return x == y or x == 0 or y == n - 1 or (x, y) in related

        if not _is_transitive(n, le):
            continue
        matrix = tuple(tuple(le(x, y) for y in range(n)) for x in range(n))
        if not check_lattice(_order_only(n, matrix), CheckReport()):
            continue
        key = _order_key(n, matrix)
        if key not in seen:
            seen[key] = matrix
    logger.debug("found %s lattices of size %s", len(seen), n)
    return [seen[key] for key in sorted(seen)]


def _order_only(n: int, leq: Order) -> FinAlgebra:
    return FinAlgebra(n=n, unit=0, prod=[[0] * n] * n, leq=leq)


def _is_transitive(n: int, le) -> bool:
    return all(
        le(x, z)
        for x in range(n)
        for y in range(n)
        for z in range(n)
        if le(x, y) and le(y, z)
    )


def _order_key(n: int, matrix: Matrix) -> Tuple[int, ...]:
    best: Optional[Tuple[int, ...]] = None
    for order in permutations(range(n)):
        if any(matrix[order[j]][order[i]] for i in range(n) for j in range(i + 1, n)):
            continue
        key = tuple(int(matrix[x][y]) for x in order for y in order)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _rank_tables(task: _Task) -> Generator[Tuple[int, List[List[int]]], None, None]:
    """Yield the products x·y = the ⊑-smaller of x and y over every total ⊑ with ⊥ least.

    In a commutative conservative algebra ⊑ is a total order with the unit on
    top, so only its ranking needs to be chosen.
    """
    n = task.n
    lattice = _order_only(n, task.leq)
    for ranking in permutations(range(1, n)):
        rank = [0] * n
        for position, x in enumerate(ranking, start=1):
            rank[x] = position
        prod = [[x if rank[x] <= rank[y] else y for y in range(n)] for x in range(n)]
        if _preserves_joins(lattice, prod):
            yield ranking[-1], prod


def _preserves_joins(algebra: FinAlgebra, prod: List[List[int]]) -> bool:
    for x in algebra.elements:
        for y in algebra.elements:
            for z in algebra.elements:
                if prod[x][algebra.join(y, z)] != algebra.join(prod[x][y], prod[x][z]):
                    return False
    return True


class _ProductSearch:
    """Backtracking over the free cells of a product table with a fixed order and unit."""

    def __init__(self, task: _Task):
        self.n = task.n
        self.unit = task.unit
        self.flags = task.flags
        self.order = _order_only(task.n, task.leq)
        self.bottom = self.order.bottom
        self.table: List[List[Optional[int]]] = [[None] * self.n for _ in range(self.n)]
        self.cells: List[Cell] = []
        for x in range(self.n):
            for y in range(self.n):
                fixed = self._fixed(x, y)
                if fixed is not None:
                    self.table[x][y] = fixed
                elif Constraint.COMMUTATIVE not in self.flags or x <= y:
                    self.cells.append((x, y))

    def _fixed(self, x: int, y: int) -> Optional[int]:
        if x == self.unit:
            return y
        if y == self.unit:
            return x
        if self.bottom in (x, y):
            return self.bottom
        if x == y and Constraint.IDEMPOTENT in self.flags:
            return x
        return None

    def solve(self) -> Generator[Tuple[int, List[List[int]]], None, None]:
        """Yield (unit, product table) for every completion of the fixed cells."""
        if not self._consistent_all():
            return
        yield from self._fill(0)

    def _fill(self, index: int) -> Generator[Tuple[int, List[List[int]]], None, None]:
        if index == len(self.cells):
            yield self.unit, [list(row) for row in self.table]  # type: ignore[misc]
            return
        x, y = self.cells[index]
        mirrored = x != y and Constraint.COMMUTATIVE in self.flags
        candidates = (x, y) if Constraint.CONSERVATIVE in self.flags else range(self.n)
        for value in sorted(set(candidates)):
            self._assign(x, y, value)
            if self._consistent(x, y) and (not mirrored or self._consistent(y, x)):
                yield from self._fill(index + 1)
            self._assign(x, y, None)

    def _assign(self, x: int, y: int, value: Optional[int]):
        self.table[x][y] = value
        if Constraint.COMMUTATIVE in self.flags:
            self.table[y][x] = value

    def _consistent_all(self) -> bool:
        return all(
            self._consistent(x, y)
            for x in range(self.n)
            for y in range(self.n)
            if self.table[x][y] is not None
        )

    def _consistent(self, x: int, y: int) -> bool:
        return self._monotone(x, y) and self._joins(x, y) and self._associative(x, y)

    def _monotone(self, x: int, y: int) -> bool:
        le = self.order.le
        value = self.table[x][y]
        for a in range(self.n):
            for b in range(self.n):
                other = self.table[a][b]
                if other is None:
                    continue
                if le(a, x) and le(b, y) and not le(other, value):
                    return False
                if le(x, a) and le(y, b) and not le(value, other):
                    return False
        return True

    def _joins(self, x: int, y: int) -> bool:
        join = self.order.join
        table = self.table
        for a in range(self.n):
            for b in range(a + 1, self.n):
                c = join(a, b)
                if y in (a, b, c):
                    left = (table[x][a], table[x][b], table[x][c])
                    if None not in left and left[2] != join(left[0], left[1]):
                        return False
                if x in (a, b, c):
                    right = (table[a][y], table[b][y], table[c][y])
                    if None not in right and right[2] != join(right[0], right[1]):
                        return False
        return True

    def _associative(self, x: int, y: int) -> bool:
        table = self.table
        elements = range(self.n)
        for a in elements:
            for b in elements:
                ab = table[a][b]
                if ab is None:
                    continue
                for c in elements:
                    bc = table[b][c]
                    if bc is None:
                        continue
                    if (a, b) != (x, y) and (b, c) != (x, y) and (ab, c) != (x, y) and (a, bc) != (x, y):
                        continue
                    left, right = table[ab][c], table[a][bc]
                    if left is not None and right is not None and left != right:
                        return False
        return True
