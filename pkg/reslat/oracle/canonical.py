"""Isomorphism invariants of finite algebras.

An isomorphism of residuated lattices preserves the lattice order, so it maps
linear extensions onto linear extensions. The canonical form is the least
table tuple over all relabellings along a linear extension of the order.
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import hashlib
from typing import Generator, List, Optional, Sequence, Set, Tuple

from reslat.base import CanonicalForm, Embedding, FinAlgebra
from reslat.core.lattice import relabel


def linear_extensions(algebra: FinAlgebra) -> Generator[List[int], None, None]:
    """Yield every bottom-up linear extension of the lattice order.

    Extensions are produced in lexicographic order. A chain-tagged algebra has
    exactly one: the index order.
    """
    if algebra.is_chain_tagged:
        yield list(algebra.elements)
        return
    below = [
        {y for y in algebra.elements if algebra.lt(y, x)} for x in algebra.elements
    ]
    yield from _extend([], set(algebra.elements), below)


def _extend(
    prefix: List[int], remaining: Set[int], below: List[Set[int]]
) -> Generator[List[int], None, None]:
    if not remaining:
        yield list(prefix)
        return
    for x in sorted(remaining):
        if below[x] & remaining:
            continue
        prefix.append(x)
        remaining.remove(x)
        yield from _extend(prefix, remaining, below)
        remaining.add(x)
        prefix.pop()


def _key(algebra: FinAlgebra, order: Sequence[int]) -> Tuple[int, ...]:
    new_index = {old: new for new, old in enumerate(order)}
    key = [algebra.n, new_index[algebra.unit]]
    key.extend(int(algebra.le(x, y)) for x in order for y in order)
    key.extend(new_index[algebra.mul(x, y)] for x in order for y in order)
    return tuple(key)


def _best(algebra: FinAlgebra) -> Tuple[Tuple[int, ...], List[int]]:
    best_key: Optional[Tuple[int, ...]] = None
    best_order: List[int] = []
    for order in linear_extensions(algebra):
        key = _key(algebra, order)
        if best_key is None or key < best_key:
            best_key, best_order = key, order
    assert best_key is not None
    return best_key, best_order


def canonical(algebra: FinAlgebra) -> CanonicalForm:
    """Return the canonical form of an algebra."""
    return CanonicalForm(_best(algebra)[0])


def canonical_representative(algebra: FinAlgebra) -> FinAlgebra:
    """Return the relabelling of an algebra whose tables are its canonical form."""
    return relabel(algebra, _best(algebra)[1])


def canonical_hash(algebra: FinAlgebra) -> str:
    """Return the sha1 hex digest of the canonical form."""
    key = ",".join(str(v) for v in canonical(algebra).key)
    return hashlib.sha1(key.encode("utf-8")).hexdigest()


def is_isomorphic(first: FinAlgebra, second: FinAlgebra) -> Optional[Embedding]:
    """Return an isomorphism from first onto second, or None when there is none."""
    if first.n != second.n:
        return None
    first_key, first_order = _best(first)
    second_key, second_order = _best(second)
    if first_key != second_key:
        return None
    mapping = [0] * first.n
    for old_first, old_second in zip(first_order, second_order):
        mapping[old_first] = old_second
    return Embedding(first, second, mapping)
