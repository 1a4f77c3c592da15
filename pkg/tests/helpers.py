"""Shared instance builders for the test suite."""

from __future__ import annotations

import cutindex as ci


def hypercube(n: int) -> ci.Graph:
    edges = []
    for v in range(2**n):
        for b in range(n):
            u = v ^ (1 << b)
            if u > v:
                edges.append((v, u))
    return ci.build_graph(2**n, edges)


def cycle(n: int) -> ci.Graph:
    return ci.build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> ci.Graph:
    return ci.build_graph(n, [(i, i + 1) for i in range(n - 1)])


def random_tree(rng, n: int) -> ci.Graph:
    """Random recursive tree with shuffled labels."""
    relabel = list(range(n))
    rng.shuffle(relabel)
    edges = []
    for v in range(1, n):
        p = rng.randrange(v)
        edges.append((relabel[p], relabel[v]))
    return ci.build_graph(n, edges)


def random_weights(rng, count: int, hi: int = 100) -> tuple[int, ...]:
    return tuple(rng.randint(1, hi) for _ in range(count))


def random_coarser(rng, theta: ci.ThetaPartition) -> ci.CoarserPartition:
    r = theta.class_count
    order = list(range(r))
    rng.shuffle(order)
    k = rng.randint(1, r)
    cuts = sorted(rng.sample(range(1, r), k - 1)) if r > 1 else []
    groups = []
    prev = 0
    for cut in cuts + [r]:
        groups.append(order[prev:cut])
        prev = cut
    return ci.validate_coarser(theta, groups)


_SQ_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_HEX_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _normalize(cells) -> tuple:
    mi = min(i for i, _ in cells)
    mj = min(j for _, j in cells)
    return tuple(sorted((i - mi, j - mj) for i, j in cells))


def all_c4c8_cellsets(max_cells: int) -> list[frozenset]:
    """All connected octagon cell sets up to translation, by size."""
    level = {_normalize({(0, 0)})}
    result = [set(level)]
    for _ in range(max_cells - 1):
        nxt = set()
        for cells in level:
            cellset = set(cells)
            for i, j in cellset:
                for di, dj in _SQ_NEIGHBORS:
                    nb = (i + di, j + dj)
                    if nb not in cellset:
                        nxt.add(_normalize(cellset | {nb}))
        result.append(nxt)
        level = nxt
    return [frozenset(cells) for group in result for cells in group]


def _grow_cellset(rng, max_cells: int, neighbors, spec_type):
    cells = {(0, 0)}
    target = rng.randint(1, max_cells)
    stalls = 0
    while len(cells) < target and stalls < 50:
        frontier = sorted(
            {(i + di, j + dj) for i, j in cells for di, dj in neighbors} - cells
        )
        cand = frontier[rng.randrange(len(frontier))]
        cells.add(cand)
        try:
            spec_type(cells).validate()
        except ci.GraphError:
            cells.discard(cand)
            stalls += 1
    return spec_type(cells)


def random_c4c8(rng, max_cells: int) -> ci.C4C8Spec:
    return _grow_cellset(rng, max_cells, _SQ_NEIGHBORS, ci.C4C8Spec)


def random_benzenoid(rng, max_cells: int) -> ci.BenzenoidSpec:
    return _grow_cellset(rng, max_cells, _HEX_NEIGHBORS, ci.BenzenoidSpec)
