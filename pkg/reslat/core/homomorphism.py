"""Check that an index map between two algebras is an embedding."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.base import CheckReport, Embedding
from reslat.core.validation import ensure_residuals
from reslat.exceptions import DimensionMismatch, IndexOutOfRange, NotInjective


def check_homomorphism(embedding: Embedding) -> CheckReport:
    """Check pointwise that a map preserves ∧, ∨, ·, \\, / and the unit.

    Raises NotInjective when two elements share an image.
    """
    source = ensure_residuals(embedding.source)
    target = ensure_residuals(embedding.target)
    mapping = embedding.map
    if len(mapping) != source.n:
        raise DimensionMismatch("map", source.n, len(mapping))
    seen = {}
    for x, image in enumerate(mapping):
        if not 0 <= image < target.n:
            raise IndexOutOfRange("map", image, target.n)
        if image in seen:
            raise NotInjective(seen[image], x)
        seen[image] = x

    report = CheckReport()
    if mapping[source.unit] != target.unit:
        report.add("unit", source.unit)
    operations = [
        ("meet", source.meet, target.meet),
        ("join", source.join, target.join),
        ("product", source.mul, target.mul),
        ("left residual", source.left_div, target.left_div),
        ("right residual", source.right_div, target.right_div),
    ]
    for name, inside, outside in operations:
        for x in source.elements:
            for y in source.elements:
                if mapping[inside(x, y)] != outside(mapping[x], mapping[y]):
                    report.add(name, x, y)
    return report
