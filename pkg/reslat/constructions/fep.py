"""Embed a finite partial subalgebra of a conservative residuated lattice into a finite one."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Iterable, List, Set

from reslat.base import CheckReport, FepClosure, FinAlgebra
from reslat.constructions.checks import self_check
from reslat.core.lattice import linear_extension, normalise_order
from reslat.core.properties import is_conservative, properties
from reslat.core.validation import complete_residuals, ensure_residuals
from reslat.exceptions import WrongClass

logger = logging.getLogger(__name__)


def _join_closure(algebra: FinAlgebra, generators: Set[int]) -> Set[int]:
    closed = set(generators)
    while True:
        found = {algebra.join(x, y) for x in closed for y in closed}
        if found <= closed:
            return closed
        closed |= found


def _on_carrier(algebra: FinAlgebra, carrier: List[int]) -> FinAlgebra:
    index = {x: i for i, x in enumerate(carrier)}
    return normalise_order(
        FinAlgebra(
            n=len(carrier),
            unit=index[algebra.unit],
            prod=[[index[algebra.mul(x, y)] for y in carrier] for x in carrier],
            leq=[[algebra.le(x, y) for y in carrier] for x in carrier],
        )
    )


def fep_closure(algebra: FinAlgebra, subset: Iterable[int]) -> FepClosure:
    """Build the finite algebra on the ∨-closure of a partial subalgebra and its helpers.

    With ⊤ = sup B, B' = B ∪ {⊤\\1, 1/⊤} and C = B' ∪ {a∧1 : a ∈ B'}, the
    carrier is the ∨-subsemilattice generated by C. The product is restricted,
    the meet and residuals are those of the finite lattice. The unit is always
    added to B.
    """
    if not is_conservative(algebra):
        raise WrongClass("fep_closure requires a conservative algebra")
    algebra = ensure_residuals(algebra)
    unit = algebra.unit
    partial = set(subset) | {unit}
    top = unit
    for x in partial:
        top = algebra.join(top, x)
    extended = partial | {algebra.left_div(top, unit), algebra.right_div(unit, top)}
    generators = extended | {algebra.meet(x, unit) for x in extended}
    closure = _join_closure(algebra, generators)
    ordered = sorted(closure)
    carrier = [ordered[i] for i in linear_extension(_on_carrier(algebra, ordered))]
    finite = self_check(
        "fep_closure",
        complete_residuals(_on_carrier(algebra, carrier)),
        lambda result: keeps_universal_flags(algebra, result),
    )
    logger.debug("closure of %s elements has %s elements", len(partial), finite.n)
    return FepClosure(finite, tuple(carrier), tuple(sorted(partial)))


def check_partial_preservation(algebra: FinAlgebra, closure: FepClosure) -> CheckReport:
    """Check that every operation defined inside the partial subalgebra is preserved."""
    algebra = ensure_residuals(algebra)
    finite = closure.algebra
    report = CheckReport()
    operations = [
        ("meet", algebra.meet, finite.meet),
        ("join", algebra.join, finite.join),
        ("product", algebra.mul, finite.mul),
        ("left residual", algebra.left_div, finite.left_div),
        ("right residual", algebra.right_div, finite.right_div),
    ]
    members = set(closure.subset)
    for name, outer, inner in operations:
        for x in closure.subset:
            for y in closure.subset:
                value = outer(x, y)
                if value not in members:
                    continue
                if inner(closure.label(x), closure.label(y)) != closure.label(value):
                    report.add(name, x, y)
    return report


UNIVERSAL_FLAGS = ["idempotent", "commutative", "conservative", "totally_ordered"]


def keeps_universal_flags(source: FinAlgebra, result: FinAlgebra) -> bool:
    """Return True when every universal flag of source also holds in result."""
    before = properties(source).to_data()
    after = properties(result).to_data()
    return all(after[name] for name in UNIVERSAL_FLAGS if before[name])
