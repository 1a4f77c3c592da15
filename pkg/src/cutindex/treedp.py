"""Linear-time weighted Wiener and Szeged indices of trees.

Removing an edge of a tree leaves exactly two components, so both indices
reduce to one product per edge: the weight sums of the two sides.  A single
bottom-up pass over a rooted order computes every subtree weight, which is
one side of every such cut; the other side is the total minus it.

The pass visits vertices in reverse BFS order from the root (every vertex is
visited after everything in its subtree), keeps a running weight w(y) that
ends up holding y's subtree weight, and accumulates partial sums s(y) up the
tree; s(root) is the index.  Both evaluators share the pass; the Wiener
variant is the edge-weight-free special case.
"""

from __future__ import annotations

from collections import deque

from .core import Graph, GraphError, check_u64
from .indices import VertexEdgeWeightedGraph, VertexWeightedGraph


def _rooted_order(g: Graph, root: int):
    """BFS order, parent vertex and parent edge arrays for a tree."""
    n = g.vertex_count
    order = [root]
    parent = [-1] * n
    parent_edge = [-1] * n
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, k in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                parent_edge[y] = k
                order.append(y)
                queue.append(y)
    return order, parent, parent_edge


def _require_tree(g: Graph) -> None:
    if g.vertex_count == 0:
        raise GraphError("not a tree: empty graph")
    if g.edge_count != g.vertex_count - 1:
        raise GraphError(
            f"not a tree: {g.vertex_count} vertices but {g.edge_count} edges"
        )
    order, _, _ = _rooted_order(g, 0)
    if len(order) != g.vertex_count:
        raise GraphError("not a tree: graph is disconnected")


def _tree_dp(g: Graph, weights, edge_weights, root: int = 0):
    """One bottom-up pass; returns s(root).

    edge_weights of None means the factor-free Wiener variant.
    """
    order, parent, parent_edge = _rooted_order(g, root)
    w = list(weights)
    s = [0] * g.vertex_count
    total = sum(weights)
    for y in reversed(order):
        if y == root:
            continue
        e = parent_edge[y]
        n1 = w[y]
        n2 = total - n1
        term = n1 * n2 if edge_weights is None else edge_weights[e] * n1 * n2
        sy = s[y] + term
        p = parent[y]
        s[p] += sy
        w[p] += n1
    return s[root]


def wiener_tree_linear(t: VertexWeightedGraph, assert_tree: bool = True):
    """Weighted Wiener index of a tree as the sum of per-edge side products.

    One O(n) pass; equals the quadratic weighted definition.  assert_tree
    skips the (also linear) tree validation when the caller has already
    established the shape.
    """
    if assert_tree:
        _require_tree(t.graph)
    if t.graph.vertex_count == 0:
        raise GraphError("not a tree: empty graph")
    return check_u64(_tree_dp(t.graph, t.w, None), "weighted Wiener index")


def szeged_tree_linear(t: VertexEdgeWeightedGraph):
    """Weighted Szeged index of a tree in one O(n) bottom-up pass."""
    _require_tree(t.graph)
    return check_u64(_tree_dp(t.graph, t.w, t.w_edge), "weighted Szeged index")


def tree_cut_rows(t: VertexEdgeWeightedGraph) -> list[tuple[int, object, object]]:
    """Per-edge cut sides of a tree: (edge index, subtree-side sum, rest).

    Diagnostic companion to the evaluators (same pass, rows instead of the
    accumulated total), ordered by edge index.
    """
    _require_tree(t.graph)
    g = t.graph
    order, parent, parent_edge = _rooted_order(g, 0)
    w = list(t.w)
    total = sum(t.w)
    rows: list[tuple[int, object, object]] = [None] * g.edge_count  # type: ignore[list-item]
    for y in reversed(order):
        if y == 0:
            continue
        e = parent_edge[y]
        rows[e] = (e, w[y], total - w[y])
        w[parent[y]] += w[y]
    return rows
