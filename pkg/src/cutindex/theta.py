"""Djokovic-Winkler relation, its transitive closure, and partial-cube recognition.

Two edges e1 = u1v1, e2 = u2v2 are related when

    d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2).

The relation is reflexive and symmetric; its transitive closure partitions the
edge set into classes E_1, ..., E_r.  A connected graph is a partial cube
exactly when it is bipartite and the relation is already transitive; we
recognize that directly: build the classes by pairwise tests, cut along each
class, read off a binary coordinate per class, and verify exhaustively that
Hamming distance of the coordinates equals graph distance for every vertex
pair.  Acceptance therefore comes with a fully checked hypercube embedding,
and rejection with a machine-checkable witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    Graph,
    GraphError,
    component_labels,
    components_after_removal,
    distance_matrix,
    is_bipartite,
)

_PAIR_BLOCK = 512  # edge-pair tests are evaluated in blocks of this many rows


def theta_related(d: np.ndarray, e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Test the relation for two edges given the distance matrix of their graph."""
    u1, v1 = e1
    u2, v2 = e2
    return int(d[u1, u2]) + int(d[v1, v2]) != int(d[u1, v2]) + int(d[v1, u2])


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class ThetaPartition:
    """Edge partition into transitive-closure classes.

    classes are sorted edge-index tuples, ordered by smallest contained edge
    index; class_of maps edge index -> class index.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @staticmethod
    def from_classes(classes, edge_count: int) -> "ThetaPartition":
        """Canonicalize and validate a list of edge-index sets as a partition."""
        normalized = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])
        class_of = [-1] * edge_count
        for j, cls in enumerate(normalized):
            if not cls:
                raise GraphError("empty edge class")
            for k in cls:
                if not 0 <= k < edge_count:
                    raise GraphError(f"edge index {k} out of range [0,{edge_count})")
                if class_of[k] != -1:
                    raise GraphError(f"edge {k} appears in two classes")
                class_of[k] = j
        missing = [k for k, j in enumerate(class_of) if j == -1]
        if missing:
            raise GraphError(f"edge {missing[0]} not covered by any class")
        return ThetaPartition(tuple(normalized), tuple(class_of))


def _related_matrix_blocks(d: np.ndarray, edges):
    """Yield (row_offset, block) of the pairwise relation, block-by-block.

    block[i, j] is True when edge (row_offset + i) is related to edge j.
    Blocked evaluation keeps peak memory at O(block * m) instead of O(m^2)
    int32 temporaries.
    """
    e = np.asarray(edges, dtype=np.intp).reshape(-1, 2)
    u, v = e[:, 0], e[:, 1]
    m = len(e)
    d64 = d.astype(np.int64, copy=False)
    for lo in range(0, m, _PAIR_BLOCK):
        hi = min(lo + _PAIR_BLOCK, m)
        bu, bv = u[lo:hi], v[lo:hi]
        lhs = d64[np.ix_(bu, u)] + d64[np.ix_(bv, v)]
        rhs = d64[np.ix_(bu, v)] + d64[np.ix_(bv, u)]
        yield lo, lhs != rhs


def theta_star_classes(g: Graph, d: np.ndarray | None = None) -> ThetaPartition:
    """Transitive-closure classes by O(m^2) pairwise tests and union-find.

    Class order is deterministic: by smallest contained edge index.
    """
    if d is None:
        d = distance_matrix(g)  # raises on disconnected input
    m = g.edge_count
    uf = _UnionFind(m)
    for lo, block in _related_matrix_blocks(d, g.edges):
        for i, j in np.argwhere(block):
            a, b = lo + int(i), int(j)
            if a < b:
                uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for k in range(m):
        groups.setdefault(uf.find(k), []).append(k)
    return ThetaPartition.from_classes(groups.values(), m)


@dataclass(frozen=True)
class PartialCube:
    """A recognized partial cube: graph, classes, and verified cut labeling.

    labels[v] is an r-bit integer; bit j is v's coordinate for class j, and 0
    marks the component of the cut along class j that contains the
    lower-numbered endpoint of the class's smallest-index edge.
    side_assignment[j] holds that bipartition as (bit-0 side, bit-1 side).
    """

    graph: Graph
    theta: ThetaPartition
    labels: tuple[int, ...]
    side_assignment: tuple[tuple[frozenset[int], frozenset[int]], ...] = field(repr=False)

    @property
    def dimension(self) -> int:
        return self.theta.class_count

    def label_string(self, v: int) -> str:
        """Coordinates of v as a bit string, class 0 leftmost."""
        return "".join("1" if self.labels[v] >> j & 1 else "0" for j in range(self.dimension))


@dataclass(frozen=True)
class RecognitionWitness:
    """Evidence that a graph is not a partial cube.

    kind is one of:
      - "odd_cycle": odd_cycle closes an odd cycle, so the graph is not bipartite;
      - "bad_class_cut": removing class_edges leaves component_count != 2 components;
      - "hamming_violation": the canonical cut labeling gives the pair a Hamming
        distance different from its graph distance.
    """

    kind: str
    odd_cycle: tuple[int, ...] | None = None
    class_edges: tuple[int, ...] | None = None
    component_count: int | None = None
    pair: tuple[int, int] | None = None

    def verify(self, g: Graph) -> bool:
        """Re-check the witness against g from definitions."""
        if self.kind == "odd_cycle":
            cycle = self.odd_cycle
            if cycle is None or len(cycle) % 2 == 0 or len(cycle) < 3:
                return False
            pairs = {(min(u, v), max(u, v)) for u, v in g.edges}
            closed = list(cycle) + [cycle[0]]
            return all(
                (min(a, b), max(a, b)) in pairs for a, b in zip(closed, closed[1:])
            )
        if self.kind == "bad_class_cut":
            if self.class_edges is None:
                return False
            theta = theta_star_classes(g)
            if tuple(sorted(self.class_edges)) not in theta.classes:
                return False
            count = len(components_after_removal(g, self.class_edges))
            return count == self.component_count and count != 2
        if self.kind == "hamming_violation":
            if self.pair is None:
                return False
            theta = theta_star_classes(g)
            labels = _cut_labels(g, theta)
            if labels is None:
                return False
            u, v = self.pair
            d = int(distance_matrix(g)[u, v])
            return (labels[u] ^ labels[v]).bit_count() != d
        return False


def _cut_labels(g: Graph, theta: ThetaPartition) -> list[int] | None:
    """Canonical per-vertex coordinates from the class cuts.

    Returns None when some class cut does not split the graph in two, in
    which case no labeling is defined.
    """
    labels = [0] * g.vertex_count
    for j, cls in enumerate(theta.classes):
        comp, count = component_labels(g, cls)
        if count != 2:
            return None
        a, b = g.edges[cls[0]]
        zero_side = comp[min(a, b)]
        bit = 1 << j
        for x in range(g.vertex_count):
            if comp[x] != zero_side:
                labels[x] |= bit
    return labels


def recognize_partial_cube(g: Graph):
    """Recognize g as a partial cube, or reject with a witness.

    Returns a PartialCube whose labeling has been verified exhaustively
    (every class cut two-sided, every vertex pair's Hamming distance equal to
    its graph distance), or a RecognitionWitness.  Disconnected or empty
    input is an error, not a rejection.
    """
    if g.vertex_count == 0:
        raise GraphError("empty graph")
    d = distance_matrix(g)  # raises on disconnected input

    _, odd = is_bipartite(g)
    if odd is not None:
        return RecognitionWitness(kind="odd_cycle", odd_cycle=tuple(odd))

    theta = theta_star_classes(g, d)

    labels = [0] * g.vertex_count
    sides: list[tuple[frozenset[int], frozenset[int]]] = []
    for j, cls in enumerate(theta.classes):
        comp, count = component_labels(g, cls)
        if count != 2:
            return RecognitionWitness(
                kind="bad_class_cut", class_edges=cls, component_count=count
            )
        a, b = g.edges[cls[0]]
        zero_side = comp[min(a, b)]
        bit = 1 << j
        ones = []
        for x in range(g.vertex_count):
            if comp[x] != zero_side:
                labels[x] |= bit
                ones.append(x)
        one_set = frozenset(ones)
        sides.append((frozenset(range(g.vertex_count)) - one_set, one_set))

    bad = _hamming_mismatch(labels, theta.class_count, d)
    if bad is not None:
        return RecognitionWitness(kind="hamming_violation", pair=bad)

    return PartialCube(
        graph=g,
        theta=theta,
        labels=tuple(labels),
        side_assignment=tuple(sides),
    )


def _hamming_mismatch(labels: list[int], r: int, d: np.ndarray):
    """First vertex pair whose label Hamming distance differs from d, if any."""
    n = len(labels)
    if r <= 64:
        arr = np.asarray(labels, dtype=np.uint64)
        ham = np.bitwise_count(arr[:, None] ^ arr[None, :]).astype(np.int64)
        mismatch = np.argwhere(ham != d.astype(np.int64))
        if len(mismatch):
            u, v = (int(x) for x in mismatch[0])
            return u, v
        return None
    for u in range(n):
        lu = labels[u]
        row = d[u]
        for v in range(u + 1, n):
            if (lu ^ labels[v]).bit_count() != int(row[v]):
                return u, v
    return None


def class_sides(pc: PartialCube, class_index: int):
    """The two sides of the cut along one class, plus the class size.

    N1 is the side containing the lower-numbered endpoint of the class's
    smallest-index edge; N1 and N2 partition the vertex set.
    """
    if not 0 <= class_index < pc.theta.class_count:
        raise GraphError(
            f"class index {class_index} out of range [0,{pc.theta.class_count})"
        )
    n1, n2 = pc.side_assignment[class_index]
    return n1, n2, len(pc.theta.classes[class_index])
