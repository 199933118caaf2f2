"""Amalgamate spans of odd Sugihara chains and of commutative idempotent chains."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from reslat.base import (
    Amalgam,
    CheckReport,
    Embedding,
    FinAlgebra,
    SkeletonDecomposition,
    Span,
)
from reslat.constructions.checks import check_embeddings
from reslat.constructions.sugihara import sugihara_from_involution
from reslat.constructions.tensor import tensor
from reslat.core.homomorphism import check_homomorphism
from reslat.core.properties import is_commutative, is_idempotent, is_odd_sugihara
from reslat.core.structure import skeleton
from reslat.core.validation import ensure_residuals
from reslat.exceptions import IncompatibleSpan, InvariantBreach, WrongClass

logger = logging.getLogger(__name__)

Merged = List[Tuple[Optional[int], Optional[int]]]


def merge_chains(
    first: Sequence[int], second: Sequence[int], anchors: Sequence[Tuple[int, int]]
) -> Merged:
    """Merge two chains that share the anchor pairs into one chain.

    Both chains are given bottom to top; anchors pair positions in first with
    positions in second and must be increasing in both. Between two anchors the
    elements only in first come before the elements only in second. Each entry
    of the result is (element of first, element of second) with None for a
    missing side.
    """
    result: Merged = []
    first_at, second_at = 0, 0
    for first_pos, second_pos in list(anchors) + [(len(first), len(second))]:
        if first_pos < first_at or second_pos < second_at:
            raise IncompatibleSpan("the shared elements are not in the same order")
        result.extend((x, None) for x in first[first_at:first_pos])
        result.extend((None, y) for y in second[second_at:second_pos])
        if first_pos < len(first):
            result.append((first[first_pos], second[second_pos]))
        first_at, second_at = first_pos + 1, second_pos + 1
    return result


def _check_span(span: Span):
    for leg in (span.i1, span.i2):
        if not check_homomorphism(leg).ok:
            raise IncompatibleSpan("a leg of the span is not an embedding")


def _require_chains(span: Span, operation: str):
    for algebra in (span.a, span.b, span.c):
        if not algebra.is_chain_tagged:
            raise WrongClass(f"{operation} requires chain-tagged algebras")


def _close_square(operation: str, span: Span, amalgam: Amalgam) -> Amalgam:
    check_embeddings(operation, amalgam.j1, amalgam.j2)
    report = CheckReport()
    for x in span.a.elements:
        if amalgam.j1(span.i1(x)) != amalgam.j2(span.i2(x)):
            report.add("square commutes", x)
    if not report.ok:
        raise InvariantBreach(operation, report)
    return amalgam


def amalgamate_osm(span: Span) -> Amalgam:
    """Amalgamate a span of totally ordered odd Sugihara monoids.

    The strict negatives of both targets are merged, the elements only in the
    first target coming first within each gap between shared elements. The
    result is the odd Sugihara chain on the merged negatives.
    """
    _require_chains(span, "amalgamate_osm")
    for algebra in (span.a, span.b, span.c):
        if not is_odd_sugihara(algebra):
            raise WrongClass("amalgamate_osm requires odd Sugihara chains")
    _check_span(span)
    a, b, c = span.a, span.b, span.c
    b_negatives = list(range(b.unit))
    c_negatives = list(range(c.unit))
    anchors = [(span.i1(x), span.i2(x)) for x in range(a.unit)]
    merged = merge_chains(b_negatives, c_negatives, anchors)
    m = len(merged)
    d = sugihara_from_involution(2 * m + 1)
    j1 = _sugihara_map(b, {x: i for i, (x, _) in enumerate(merged) if x is not None}, m)
    j2 = _sugihara_map(c, {y: i for i, (_, y) in enumerate(merged) if y is not None}, m)
    logger.debug("amalgamated odd Sugihara chains into size %s", d.n)
    return _close_square(
        "amalgamate_osm",
        span,
        Amalgam(d, Embedding(b, d, j1), Embedding(c, d, j2)),
    )


def _sugihara_map(algebra: FinAlgebra, negatives: Dict[int, int], m: int) -> List[int]:
    algebra = ensure_residuals(algebra)
    result = []
    for x in algebra.elements:
        if x < algebra.unit:
            result.append(negatives[x])
        elif x == algebra.unit:
            result.append(m)
        else:
            result.append(2 * m - negatives[algebra.neg(x)])
    return result


def amalgamate_cic(span: Span) -> Amalgam:
    """Amalgamate a span of commutative idempotent residuated chains.

    The skeletons are amalgamated with amalgamate_osm. Over a skeleton point
    shared with the source, the two fibers are merged around the image of the
    source fiber; other points keep the fiber of the target they come from.
    """
    _require_chains(span, "amalgamate_cic")
    for algebra in (span.a, span.b, span.c):
        if not (is_commutative(algebra) and is_idempotent(algebra)):
            raise WrongClass("amalgamate_cic requires commutative idempotent chains")
    _check_span(span)
    parts = [skeleton(algebra) for algebra in (span.a, span.b, span.c)]
    a_parts, b_parts, c_parts = parts
    skeleton_span = Span(
        Embedding(
            a_parts.algebra,
            b_parts.algebra,
            [b_parts.elements.index(span.i1(x)) for x in a_parts.elements],
        ),
        Embedding(
            a_parts.algebra,
            c_parts.algebra,
            [c_parts.elements.index(span.i2(x)) for x in a_parts.elements],
        ),
    )
    skeleton_amalgam = amalgamate_osm(skeleton_span)
    d_points = skeleton_amalgam.d.n
    b_at = {skeleton_amalgam.j1(p): p for p in range(b_parts.algebra.n)}
    c_at = {skeleton_amalgam.j2(q): q for q in range(c_parts.algebra.n)}
    a_at = {skeleton_amalgam.j1(skeleton_span.i1(p)): p for p in range(a_parts.algebra.n)}

    fibers: List[Merged] = []
    for point in range(d_points):
        b_fiber = list(b_parts.fibers[b_at[point]]) if point in b_at else []
        c_fiber = list(c_parts.fibers[c_at[point]]) if point in c_at else []
        anchors = []
        if point in a_at:
            anchors = [
                (b_fiber.index(span.i1(x)), c_fiber.index(span.i2(x)))
                for x in a_parts.fibers[a_at[point]]
            ]
        fibers.append(merge_chains(b_fiber, c_fiber, anchors))

    d = tensor(
        SkeletonDecomposition(skeleton_amalgam.d, tuple(len(f) for f in fibers))
    )
    j1 = [0] * span.b.n
    j2 = [0] * span.c.n
    index = 0
    for fiber in fibers:
        for x, y in fiber:
            if x is not None:
                j1[x] = index
            if y is not None:
                j2[y] = index
            index += 1
    logger.debug("amalgamated commutative idempotent chains into size %s", d.n)
    return _close_square(
        "amalgamate_cic",
        span,
        Amalgam(d, Embedding(span.b, d, j1), Embedding(span.c, d, j2)),
    )
