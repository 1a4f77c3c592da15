"""Wiener and Szeged index evaluators.

Three routes to the same numbers, kept deliberately independent so they can
check each other:

  * brute force straight from the definitions (distance sums, per-edge
    strict-side counts);
  * the cut formulas over the Theta classes of a recognized partial cube;
  * the partition route, summing weighted indices of quotient graphs over a
    partition coarser than the Theta partition.

Equidistant vertices count on neither side of an edge (strict inequalities);
bipartite graphs have none, but the weighted evaluators implement the strict
rule so they are correct on any connected input.  Integer-weighted inputs
produce exact integers: side classification uses integer distance
comparisons, and accumulation happens in Python integers (with a numpy int64
fast path only when a proven bound rules out overflow).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Graph, GraphError, check_u64, distance_matrix
from .quotient import CoarserPartition, build_quotient
from .theta import PartialCube, class_sides

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class VertexWeightedGraph:
    """A graph with a nonnegative weight per vertex."""

    graph: Graph
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        if len(self.w) != self.graph.vertex_count:
            raise GraphError("vertex weight count does not match vertex count")
        for v, wv in enumerate(self.w):
            if wv < 0:
                raise GraphError(f"vertex {v}: negative weight {wv}")


@dataclass(frozen=True)
class VertexEdgeWeightedGraph:
    """A graph with nonnegative vertex weights and edge weights."""

    graph: Graph
    w: tuple
    w_edge: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(self.w))
        object.__setattr__(self, "w_edge", tuple(self.w_edge))
        if len(self.w) != self.graph.vertex_count:
            raise GraphError("vertex weight count does not match vertex count")
        if len(self.w_edge) != self.graph.edge_count:
            raise GraphError("edge weight count does not match edge count")
        for v, wv in enumerate(self.w):
            if wv < 0:
                raise GraphError(f"vertex {v}: negative weight {wv}")
        for k, wk in enumerate(self.w_edge):
            if wk < 0:
                raise GraphError(f"edge {k}: negative weight {wk}")


def _all_int(values) -> bool:
    return all(isinstance(x, (int, np.integer)) for x in values)


def wiener_brute(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs, from the distance matrix."""
    d = distance_matrix(g)
    n = g.vertex_count
    if n and n * n * int(d.max(initial=0)) < _INT64_SAFE:
        total = int(d.sum(dtype=np.int64)) // 2
    else:
        total = sum(int(x) for row in d for x in row) // 2
    return check_u64(total, "Wiener index")


def szeged_brute(g: Graph) -> int:
    """Sum over edges of the product of strict-side vertex counts."""
    d = distance_matrix(g)
    total = 0
    for u, v in g.edges:
        cu, cv = d[:, u], d[:, v]
        n1 = int(np.count_nonzero(cu < cv))
        n2 = int(np.count_nonzero(cv < cu))
        total += n1 * n2
    return check_u64(total, "Szeged index")


def _weighted_row_sums(d: np.ndarray, w) -> list:
    """Per-vertex sums of w(v) * d(u,v), exact for integers and floats alike."""
    n = len(w)
    if _all_int(w):
        w_max = max((int(x) for x in w), default=0)
        if n * w_max * int(d.max(initial=0)) < _INT64_SAFE:
            vec = d.astype(np.int64) @ np.asarray([int(x) for x in w], dtype=np.int64)
            return [int(x) for x in vec]
        return [sum(int(x) * int(d[u, v]) for v, x in enumerate(w)) for u in range(n)]
    return [float(np.dot(d[u].astype(np.float64), np.asarray(w, dtype=np.float64))) for u in range(n)]


def wiener_weighted(gw: VertexWeightedGraph):
    """Half the double sum of w(u) w(v) d(u,v) over ordered vertex pairs."""
    d = distance_matrix(gw.graph)
    rows = _weighted_row_sums(d, gw.w)
    double = sum(wu * ru for wu, ru in zip(gw.w, rows))
    total = double // 2 if isinstance(double, int) else double / 2
    return check_u64(total, "weighted Wiener index")


def szeged_weighted(gww: VertexEdgeWeightedGraph):
    """Sum over edges of w'(e) times the product of strict-side weight sums."""
    g = gww.graph
    d = distance_matrix(g)
    w = gww.w
    int_fast = (
        _all_int(w)
        and len(w) * max((int(x) for x in w), default=0) < _INT64_SAFE
    )
    w_arr = np.asarray([int(x) for x in w], dtype=np.int64) if int_fast else None
    total = 0
    for k, (u, v) in enumerate(g.edges):
        we = gww.w_edge[k]
        if we == 0:
            continue
        cu, cv = d[:, u], d[:, v]
        if int_fast:
            n1 = int(w_arr[cu < cv].sum())
            n2 = int(w_arr[cv < cu].sum())
        else:
            n1 = sum(w[x] for x in np.flatnonzero(cu < cv))
            n2 = sum(w[x] for x in np.flatnonzero(cv < cu))
        total += we * n1 * n2
    return check_u64(total, "weighted Szeged index")


@dataclass(frozen=True)
class CutClassSummary:
    """One Theta class of a partial cube: size and cut-side sizes."""

    class_index: int
    size: int
    n1: int
    n2: int


def cut_class_summaries(pc: PartialCube) -> list[CutClassSummary]:
    out = []
    for j in range(pc.theta.class_count):
        n1, n2, size = class_sides(pc, j)
        out.append(CutClassSummary(class_index=j, size=size, n1=len(n1), n2=len(n2)))
    return out


def wiener_cut(pc: PartialCube) -> int:
    """Wiener index as the sum of n1 * n2 over the Theta classes."""
    total = 0
    for s in cut_class_summaries(pc):
        total += s.n1 * s.n2
    return check_u64(total, "Wiener index")


def szeged_cut(pc: PartialCube) -> int:
    """Szeged index as the sum of |E_j| * n1 * n2 over the Theta classes."""
    total = 0
    for s in cut_class_summaries(pc):
        total += s.size * s.n1 * s.n2
    return check_u64(total, "Szeged index")


def wiener_via_partition(pc: PartialCube, cp: CoarserPartition) -> int:
    """Wiener index as the sum of weighted Wiener indices of the quotients."""
    total = 0
    for i in range(cp.group_count):
        wq = build_quotient(pc, cp, i)
        total += wiener_weighted(VertexWeightedGraph(wq.quotient, wq.vertex_weight))
    return check_u64(total, "Wiener index")


def szeged_via_partition(pc: PartialCube, cp: CoarserPartition) -> int:
    """Szeged index as the sum of weighted Szeged indices of the quotients."""
    total = 0
    for i in range(cp.group_count):
        wq = build_quotient(pc, cp, i)
        total += szeged_weighted(
            VertexEdgeWeightedGraph(wq.quotient, wq.vertex_weight, wq.edge_weight)
        )
    return check_u64(total, "Szeged index")
