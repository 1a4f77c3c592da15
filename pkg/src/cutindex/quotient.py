"""Coarser edge partitions and weighted quotient graphs.

A partition of the edge set is *coarser* than the Theta partition when each of
its groups is a union of Theta classes.  Contracting the components of
G minus one group F yields the quotient G/F; vertex weights carry component
sizes (or arbitrary base weights), edge weights carry the number of F-edges
joining two components.  These weighted quotients are what the partition-based
index formulas consume.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Graph, GraphError, build_graph, component_labels
from .theta import PartialCube, ThetaPartition, class_sides, recognize_partial_cube


@dataclass(frozen=True)
class CoarserPartition:
    """Groups of Theta-class indices forming a partition of all classes."""

    groups: tuple[tuple[int, ...], ...]
    group_of: tuple[int, ...]

    @property
    def group_count(self) -> int:
        return len(self.groups)


def validate_coarser(theta: ThetaPartition, grouping) -> CoarserPartition:
    """Accept a grouping iff it partitions the class indices {0..r-1}.

    Group order is preserved; missing or duplicated classes are rejected with
    the offending class index named.
    """
    r = theta.class_count
    group_of = [-1] * r
    groups: list[tuple[int, ...]] = []
    for gi, group in enumerate(grouping):
        members = sorted(set(group))
        if len(members) != len(list(group)):
            dup = next(j for j in group if list(group).count(j) > 1)
            raise GraphError(f"class {dup} duplicated within group {gi}")
        if not members:
            raise GraphError(f"group {gi} is empty")
        for j in members:
            if not 0 <= j < r:
                raise GraphError(f"class index {j} out of range [0,{r})")
            if group_of[j] != -1:
                raise GraphError(f"class {j} duplicated across groups")
            group_of[j] = gi
        groups.append(tuple(members))
    for j, gi in enumerate(group_of):
        if gi == -1:
            raise GraphError(f"class {j} missing from the grouping")
    return CoarserPartition(tuple(groups), tuple(group_of))


def finest_partition(theta: ThetaPartition) -> CoarserPartition:
    """Each class in its own group (the Theta partition itself)."""
    return validate_coarser(theta, [{j} for j in range(theta.class_count)])


def coarsest_partition(theta: ThetaPartition) -> CoarserPartition:
    """All classes in a single group."""
    return validate_coarser(theta, [set(range(theta.class_count))])


@dataclass(frozen=True)
class WeightedQuotient:
    """Quotient graph G/F with vertex and edge weights.

    Quotient vertices are the components of G minus the group's edges, ordered
    by smallest contained original vertex.  vertex_weight sums the base
    weights over each component; edge_weight counts (or weight-sums) the
    original edges folded into each quotient edge; class_map records, per
    quotient edge, the original class indices it represents; class_anchors
    maps each original class in the group to the lower-numbered endpoint of
    its smallest-index edge, which fixes side orientation downstream.
    """

    quotient: Graph
    vertex_weight: tuple
    edge_weight: tuple
    membership: tuple[int, ...] = field(repr=False)
    class_map: tuple[frozenset[int], ...] = field(repr=False)
    class_anchors: dict[int, int] = field(repr=False)


def quotient_by_edge_classes(
    g: Graph, theta: ThetaPartition, class_indices, base_vertex_weights=None
) -> WeightedQuotient:
    """Build the weighted quotient of g by the union of the given classes.

    This is the construction core shared by build_quotient and the geometric
    (recognition-free) pipeline; it needs only the graph and an edge
    partition, not a verified partial cube.
    """
    class_indices = tuple(class_indices)
    if base_vertex_weights is None:
        base_vertex_weights = [1] * g.vertex_count
    elif len(base_vertex_weights) != g.vertex_count:
        raise GraphError("base_vertex_weights length does not match vertex count")

    f_edges: list[int] = []
    for j in class_indices:
        f_edges.extend(theta.classes[j])
    comp, count = component_labels(g, f_edges)

    weights = [0] * count
    for v, c in enumerate(comp):
        weights[c] += base_vertex_weights[v]

    folded: dict[tuple[int, int], list] = {}
    for j in class_indices:
        for k in theta.classes[j]:
            u, v = g.edges[k]
            a, b = comp[u], comp[v]
            if a == b:
                raise GraphError(
                    f"edge {k} joins vertices of one component of the cut;"
                    " the given classes are not cut classes"
                )
            key = (a, b) if a < b else (b, a)
            entry = folded.setdefault(key, [0, set()])
            entry[0] += 1
            entry[1].add(j)

    keys = sorted(folded)
    quotient = build_graph(count, keys)
    anchors = {j: min(g.edges[theta.classes[j][0]]) for j in class_indices}
    return WeightedQuotient(
        quotient=quotient,
        vertex_weight=tuple(weights),
        edge_weight=tuple(folded[k][0] for k in keys),
        membership=tuple(comp),
        class_map=tuple(frozenset(folded[k][1]) for k in keys),
        class_anchors=anchors,
    )


def build_quotient(
    pc: PartialCube, cp: CoarserPartition, group_index: int, base_vertex_weights=None
) -> WeightedQuotient:
    """Weighted quotient of a partial cube by one group of a coarser partition."""
    if not 0 <= group_index < cp.group_count:
        raise GraphError(f"group index {group_index} out of range [0,{cp.group_count})")
    return quotient_by_edge_classes(
        pc.graph, pc.theta, cp.groups[group_index], base_vertex_weights
    )


@dataclass(frozen=True)
class QuotientClassSummary:
    """One Theta class of a quotient and the original-graph data it recovers.

    edge_weight_sum recovers the size of the represented original class;
    side1_weight/side2_weight recover the weighted cut sides, oriented so
    side1 corresponds to the original class's own side-1 (the side holding
    the class anchor vertex).
    """

    quotient_class: int
    edges: tuple[int, ...]
    original_class: int
    edge_weight_sum: int
    side1_weight: int
    side2_weight: int


def quotient_theta_classes(wq: WeightedQuotient) -> list[QuotientClassSummary]:
    """Per-class summaries of a weighted quotient.

    The quotient of a partial cube by a coarser group is itself a partial
    cube; a recognition failure here means the quotient was not built from
    genuine cut classes and is reported as an error.
    """
    result = recognize_partial_cube(wq.quotient)
    if not isinstance(result, PartialCube):
        raise GraphError(
            f"quotient failed partial-cube recognition ({result.kind});"
            " not built from cut classes of a partial cube"
        )
    qpc = result
    expected = len(wq.class_anchors)
    if qpc.theta.class_count != expected:
        raise GraphError(
            f"quotient has {qpc.theta.class_count} classes, expected {expected};"
            " not built from cut classes of a partial cube"
        )

    summaries: list[QuotientClassSummary] = []
    seen: set[int] = set()
    for t, cls in enumerate(qpc.theta.classes):
        represented = frozenset().union(*(wq.class_map[f] for f in cls))
        if len(represented) != 1:
            raise GraphError(
                f"quotient class {t} represents original classes {sorted(represented)};"
                " expected exactly one"
            )
        (j,) = represented
        if j in seen:
            raise GraphError(f"original class {j} represented by two quotient classes")
        seen.add(j)

        n1_set, n2_set, _ = class_sides(qpc, t)
        n1 = sum(wq.vertex_weight[x] for x in n1_set)
        n2 = sum(wq.vertex_weight[x] for x in n2_set)
        anchor_side = wq.membership[wq.class_anchors[j]]
        if anchor_side not in n1_set:
            n1, n2 = n2, n1
        summaries.append(
            QuotientClassSummary(
                quotient_class=t,
                edges=cls,
                original_class=j,
                edge_weight_sum=sum(wq.edge_weight[f] for f in cls),
                side1_weight=n1,
                side2_weight=n2,
            )
        )
    return summaries
