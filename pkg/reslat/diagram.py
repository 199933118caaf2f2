"""Hasse diagrams of the lattice order and the monoidal preorder as DOT graphs."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import List, Tuple

import networkx as nx
from graphviz import Digraph

from reslat.base import FinAlgebra
from reslat.core.properties import is_idempotent
from reslat.core.structure import monoidal_preorder

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def order_covers(algebra: FinAlgebra) -> List[Edge]:
    """Return the covering pairs (x, y) of the lattice order, x below y."""
    graph = nx.DiGraph()
    graph.add_nodes_from(algebra.elements)
    graph.add_edges_from(
        (x, y) for x in algebra.elements for y in algebra.elements if algebra.lt(x, y)
    )
    return sorted(nx.transitive_reduction(graph).edges)


def preorder_classes(algebra: FinAlgebra) -> Tuple[List[List[int]], List[Edge]]:
    """Return the ∼-classes of the monoidal preorder and the covers between them.

    Classes are sorted lists of elements; a cover (i, j) means class i lies
    directly ⊑-below class j.
    """
    preorder = monoidal_preorder(algebra)
    graph = nx.DiGraph()
    graph.add_nodes_from(algebra.elements)
    graph.add_edges_from(
        (x, y)
        for x in algebra.elements
        for y in algebra.elements
        if x != y and preorder.leq(x, y)
    )
    condensed = nx.condensation(graph)
    members = {c: sorted(condensed.nodes[c]["members"]) for c in condensed.nodes}
    order = sorted(members, key=lambda c: members[c])
    index = {c: i for i, c in enumerate(order)}
    covers = sorted(
        (index[a], index[b]) for a, b in nx.transitive_reduction(condensed).edges
    )
    return [members[c] for c in order], covers


def _graph(name: str, algebra: FinAlgebra) -> Digraph:
    graph = Digraph(name=name)
    graph.attr(rankdir="BT")
    graph.attr("node", shape="circle", width=".3", height=".3", fixedsize="true", fontsize="10")
    for x in algebra.elements:
        graph.node(str(x), shape="doublecircle" if x == algebra.unit else "circle")
    return graph


def _add_order(graph: Digraph, algebra: FinAlgebra):
    for x, y in order_covers(algebra):
        graph.edge(str(x), str(y), style="solid")


def _add_preorder(graph: Digraph, algebra: FinAlgebra):
    classes, covers = preorder_classes(algebra)
    for members in classes:
        for x, y in zip(members, members[1:]):
            graph.edge(str(x), str(y), style="dashed", dir="both")
    for lower, upper in covers:
        for x in classes[lower]:
            for y in classes[upper]:
                graph.edge(str(x), str(y), style="dashed")


def hasse_diagrams(algebra: FinAlgebra, both: bool = False) -> List[Digraph]:
    """Return the Hasse diagrams of ≤ and of ⊑.

    ≤-covers are solid and ⊑-covers dashed; mutually ⊑-related elements are
    joined by a two-headed dashed edge. With both set, one graph holds the two
    relations. The ⊑ diagram is left out for algebras that are not idempotent.
    """
    idempotent = is_idempotent(algebra)
    if not idempotent:
        logger.warning("the algebra is not idempotent; drawing the lattice order only")
    if both:
        graph = _graph("reslat", algebra)
        _add_order(graph, algebra)
        if idempotent:
            _add_preorder(graph, algebra)
        return [graph]
    order_graph = _graph("order", algebra)
    _add_order(order_graph, algebra)
    graphs = [order_graph]
    if idempotent:
        preorder_graph = _graph("preorder", algebra)
        _add_preorder(preorder_graph, algebra)
        graphs.append(preorder_graph)
    return graphs


def to_dot(algebra: FinAlgebra, both: bool = False) -> str:
    """Return the DOT source of the Hasse diagrams."""
    return "".join(graph.source for graph in hasse_diagrams(algebra, both))
