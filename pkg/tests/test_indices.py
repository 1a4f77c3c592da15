import random

import pytest

import cutindex as ci
from helpers import cycle, hypercube, path, random_coarser, random_tree, random_weights


def test_wiener_brute_values():
    assert ci.wiener_brute(ci.build_graph(2, [(0, 1)])) == 1
    assert ci.wiener_brute(path(4)) == 10
    assert ci.wiener_brute(cycle(4)) == 8
    assert ci.wiener_brute(cycle(5)) == 15
    assert ci.wiener_brute(cycle(8)) == 64


def test_szeged_brute_values():
    assert ci.szeged_brute(ci.build_graph(2, [(0, 1)])) == 1
    assert ci.szeged_brute(path(4)) == 10  # tree identity: 3+4+3
    assert ci.szeged_brute(cycle(4)) == 16
    assert ci.szeged_brute(cycle(8)) == 128
    # odd cycle: one equidistant vertex per edge, strict sides of size 2
    assert ci.szeged_brute(cycle(5)) == 20


def test_brute_rejects_disconnected():
    g = ci.build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(ci.GraphError):
        ci.wiener_brute(g)
    with pytest.raises(ci.GraphError):
        ci.szeged_brute(g)


def test_weighted_collapse_to_unweighted():
    for g in (cycle(6), path(5), hypercube(3)):
        gw = ci.VertexWeightedGraph(g, [1] * g.vertex_count)
        gww = ci.VertexEdgeWeightedGraph(g, [1] * g.vertex_count, [1] * g.edge_count)
        assert ci.wiener_weighted(gw) == ci.wiener_brute(g)
        assert ci.szeged_weighted(gww) == ci.szeged_brute(g)


def test_weighted_fixture_trees():
    t1, t2, t3, t4 = ci.reference_quotient_trees()
    assert ci.wiener_weighted(ci.VertexWeightedGraph(t1.graph, t1.w)) == 499
    assert ci.wiener_weighted(ci.VertexWeightedGraph(t2.graph, t2.w)) == 288
    assert ci.wiener_weighted(ci.VertexWeightedGraph(t3.graph, t3.w)) == 467
    assert ci.wiener_weighted(ci.VertexWeightedGraph(t4.graph, t4.w)) == 388
    assert ci.szeged_weighted(t1) == 1497
    assert ci.szeged_weighted(t2) == 960
    assert ci.szeged_weighted(t3) == 1561
    assert ci.szeged_weighted(t4) == 972


def test_strict_sides_on_non_bipartite_weighted():
    g = cycle(5)
    gww = ci.VertexEdgeWeightedGraph(g, (1, 2, 3, 4, 5), (1, 1, 1, 1, 1))
    # edge (0,1): strictly closer to 0 are {0,4}, to 1 are {1,2}; 3 equidistant
    total = (1 + 5) * (2 + 3) + (2 + 1) * (3 + 4) + (3 + 2) * (4 + 5) + (4 + 3) * (5 + 1) + (5 + 4) * (1 + 2)
    assert ci.szeged_weighted(gww) == total


def test_cut_method_values():
    assert ci.wiener_cut(ci.recognize_partial_cube(cycle(4))) == 8
    assert ci.szeged_cut(ci.recognize_partial_cube(cycle(4))) == 16
    q3 = ci.recognize_partial_cube(hypercube(3))
    assert ci.wiener_cut(q3) == 48
    assert ci.szeged_cut(q3) == 192
    k2 = ci.recognize_partial_cube(ci.build_graph(2, [(0, 1)]))
    assert ci.wiener_cut(k2) == 1
    assert ci.szeged_cut(k2) == 1


def test_cut_class_summaries():
    q3 = ci.recognize_partial_cube(hypercube(3))
    rows = ci.cut_class_summaries(q3)
    assert [(s.size, s.n1, s.n2) for s in rows] == [(4, 4, 4)] * 3


def test_partition_method_examples():
    c4 = ci.recognize_partial_cube(cycle(4))
    finest = ci.finest_partition(c4.theta)
    assert ci.wiener_via_partition(c4, finest) == ci.wiener_cut(c4) == 8
    assert ci.szeged_via_partition(c4, finest) == ci.szeged_cut(c4) == 16
    single = ci.coarsest_partition(c4.theta)
    assert ci.wiener_via_partition(c4, single) == 8
    assert ci.szeged_via_partition(c4, single) == 16

    q3 = ci.recognize_partial_cube(hypercube(3))
    cp = ci.validate_coarser(q3.theta, [{0}, {1, 2}])
    assert ci.wiener_via_partition(q3, cp) == 48
    assert ci.szeged_via_partition(q3, cp) == 192


def test_partition_independence_random():
    rng = random.Random(3)
    for g in (hypercube(4), cycle(12), random_tree(rng, 20)):
        pc = ci.recognize_partial_cube(g)
        w0, s0 = ci.wiener_brute(g), ci.szeged_brute(g)
        assert ci.wiener_cut(pc) == w0 and ci.szeged_cut(pc) == s0
        for _ in range(3):
            cp = random_coarser(rng, pc.theta)
            assert ci.wiener_via_partition(pc, cp) == w0
            assert ci.szeged_via_partition(pc, cp) == s0


def test_tree_identity():
    rng = random.Random(23)
    for _ in range(25):
        g = random_tree(rng, rng.randint(2, 40))
        assert ci.szeged_brute(g) == ci.wiener_brute(g)


def test_weight_scaling():
    rng = random.Random(9)
    g = random_tree(rng, 12)
    w = random_weights(rng, 12, hi=9)
    we = random_weights(rng, 11, hi=9)
    c = 7
    base_w = ci.wiener_weighted(ci.VertexWeightedGraph(g, w))
    scaled_w = ci.wiener_weighted(ci.VertexWeightedGraph(g, [c * x for x in w]))
    assert scaled_w == c * c * base_w
    base_s = ci.szeged_weighted(ci.VertexEdgeWeightedGraph(g, w, we))
    assert ci.szeged_weighted(
        ci.VertexEdgeWeightedGraph(g, [c * x for x in w], we)
    ) == c * c * base_s
    assert ci.szeged_weighted(
        ci.VertexEdgeWeightedGraph(g, w, [c * x for x in we])
    ) == c * base_s


def test_hypercube_closed_forms_small():
    for n in range(1, 5):
        g = hypercube(n)
        assert ci.wiener_brute(g) == n * 4 ** (n - 1)
        assert ci.szeged_brute(g) == n * 2 ** (n - 1) * 4 ** (n - 1)


def test_overflow_detection():
    g = path(3)
    big = 2**33
    with pytest.raises(ci.IndexOverflowError):
        ci.wiener_weighted(ci.VertexWeightedGraph(g, [big, big, big]))
    with pytest.raises(ci.IndexOverflowError):
        ci.szeged_weighted(ci.VertexEdgeWeightedGraph(g, [big, big, big], [1, 1]))


def test_huge_weights_below_limit_are_exact():
    # the pure-python path must stay exact where int64 would have wrapped
    g = path(3)
    w = [2**31, 1, 2**31]
    got = ci.wiener_weighted(ci.VertexWeightedGraph(g, w))
    assert got == 2**31 * 1 * 1 + 2**31 * 2**31 * 2 + 1 * 2**31 * 1


def test_negative_weight_rejected():
    with pytest.raises(ci.GraphError):
        ci.VertexWeightedGraph(path(2), [1, -1])
    with pytest.raises(ci.GraphError):
        ci.VertexEdgeWeightedGraph(path(2), [1, 1], [-2])


def test_zero_edge_weights_annihilate():
    t = ci.VertexEdgeWeightedGraph(path(4), [1, 2, 3, 4], [0, 0, 0])
    assert ci.szeged_weighted(t) == 0


def test_float_weights_supported():
    g = path(3)
    got = ci.wiener_weighted(ci.VertexWeightedGraph(g, [0.5, 1.0, 0.5]))
    assert got == pytest.approx(0.5 * 1 + 0.5 * 0.5 * 2 + 1 * 0.5)
