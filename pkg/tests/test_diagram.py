"""Test Hasse diagram export."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging

from pytest import LogCaptureFixture

from reslat import FinAlgebra
from reslat.constructions import c4
from reslat.core import direct_product
from reslat.diagram import hasse_diagrams, order_covers, preorder_classes, to_dot

TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])
LUKASIEWICZ_3 = FinAlgebra(
    n=3, unit=2, prod=[[max(0, x + y - 2) for y in range(3)] for x in range(3)]
)


def test_order_covers() -> None:
    assert order_covers(c4()) == [(0, 1), (1, 2), (2, 3)]
    assert order_covers(direct_product(TWO_CHAIN, TWO_CHAIN)) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_preorder_classes() -> None:
    assert preorder_classes(c4()) == ([[0], [1, 3], [2]], [(0, 1), (1, 2)])


def test_hasse_diagrams() -> None:
    order, preorder = hasse_diagrams(c4())
    assert order.source.startswith("digraph order {")
    assert "0 -> 1" in order.source
    assert "dashed" not in order.source
    assert preorder.source.startswith("digraph preorder {")
    assert "1 -> 3" in preorder.source
    assert "dir=both" in preorder.source
    assert "doublecircle" in preorder.source


def test_both_in_one_graph() -> None:
    graphs = hasse_diagrams(c4(), both=True)
    assert len(graphs) == 1
    assert "solid" in graphs[0].source
    assert "dashed" in graphs[0].source


def test_to_dot() -> None:
    text = to_dot(c4())
    assert text.count("digraph") == 2


def test_not_idempotent(caplog: LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING):
        graphs = hasse_diagrams(LUKASIEWICZ_3)
    assert len(graphs) == 1
    assert "not idempotent" in caplog.text
