"""Graph construction, parsing, and the metric queries."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gen, petersen, random_graph
from cyclespec.errors import InputError, ParseError
from cyclespec.graph import Graph, average_degree, graph_sha256, parse_graph, serialize
from cyclespec.metrics import (
    bfs_layers,
    bipartition,
    densest_component,
    even_girth,
    girth,
    radius_center,
    spanning_bipartite_half,
    verify_cycle,
)


# ------------------------------------------------------------ construction


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4 and g.m == 4
    assert list(g.neighbors(0)) == [1, 3]
    assert g.degree(2) == 2
    assert g.has_edge(2, 3) and not g.has_edge(0, 2)


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])


def test_endpoint_out_of_range():
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])


def test_neighbors_sorted_ascending():
    g = Graph(5, [(2, 4), (2, 0), (2, 3), (2, 1)])
    assert list(g.neighbors(2)) == [0, 1, 3, 4]


def test_subgraph_keeps_original_ids():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h, orig = g.subgraph([1, 2, 3])
    assert h.n == 3 and h.m == 2
    assert list(orig) == [1, 2, 3]


# ------------------------------------------------------------ parsing


def test_parse_edgelist_with_header():
    g = parse_graph("# n=6 m=9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n")
    assert g.n == 6 and g.m == 9
    assert average_degree(g) == 3


def test_header_preserves_isolated_vertices():
    g = parse_graph("# n=5 m=1\n0 1\n")
    assert g.n == 5 and g.m == 1
    rt = parse_graph(serialize(g))
    assert rt.n == 5 and rt == g


def test_headerless_sparse_ids_remap():
    g = parse_graph("10 30\n30 500\n")
    assert g.n == 3 and g.m == 2
    assert g.meta["id_map"] == [10, 30, 500]


def test_parse_dimacs_shifts_to_zero_based():
    g = parse_graph("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    assert g.n == 4 and g.m == 3
    assert g.has_edge(0, 1) and g.has_edge(2, 3)
    assert g.meta["format"] == "dimacs"


def test_parse_garbage_raises():
    with pytest.raises(ParseError):
        parse_graph("0 zero\n")


def test_parse_empty_text():
    g = parse_graph("")
    assert g.n == 0 and g.m == 0


def test_serialize_round_trip_examples():
    for g in (gen("hypercube", d=4), gen("complete", n=7), petersen()):
        assert parse_graph(serialize(g)) == g


@given(st.integers(2, 16), st.integers(0, 10_000))
def test_serialize_round_trip_random(n, seed):
    g = random_graph(n, Fraction(1, 3), seed)
    assert parse_graph(serialize(g)) == g
    assert graph_sha256(g) == graph_sha256(parse_graph(serialize(g)))


# ------------------------------------------------------------ average degree


def test_average_degree_examples():
    assert average_degree(gen("cycle", n=6)) == 2
    assert average_degree(gen("complete_bipartite", a=3, b=3)) == 3
    assert average_degree(gen("complete_bipartite", a=3, b=40)) == Fraction(240, 43)


def test_average_degree_is_exact_rational():
    v = average_degree(gen("complete_bipartite", a=3, b=40))
    assert isinstance(v, Fraction)
    assert not v >= 6


def test_average_degree_empty_graph():
    with pytest.raises(InputError):
        average_degree(Graph(0, []))


# ------------------------------------------------------------ girth


def test_girth_examples():
    assert girth(gen("cycle", n=6)) == 6
    assert girth(gen("complete_bipartite", a=3, b=3)) == 4
    assert girth(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])) is math.inf
    assert girth(petersen()) == 5


def test_even_girth_examples():
    assert even_girth(gen("complete", n=4)) == 4
    assert even_girth(gen("cycle", n=5)) is math.inf
    assert even_girth(gen("cycle", n=6)) == 6
    assert even_girth(petersen()) == 6


@given(st.integers(2, 14), st.integers(0, 5_000))
def test_girth_le_even_girth(n, seed):
    g = random_graph(n, Fraction(2, 5), seed)
    assert girth(g) <= even_girth(g)


@given(st.integers(2, 10), st.integers(2, 10), st.integers(0, 5_000))
def test_even_girth_equals_girth_on_bipartite(a, b, seed):
    g = gen("random_bipartite", n1=a, n2=b, p="1/2", seed=seed)
    assert girth(g) == even_girth(g)


# ------------------------------------------------------------ bipartition


def test_bipartition_c6():
    bip = bipartition(gen("cycle", n=6))
    assert bip.bipartite
    sides = bip.classes()
    assert sorted(sides[0]) == [0, 2, 4] and sorted(sides[1]) == [1, 3, 5]


def test_bipartition_triangle_witness():
    bip = bipartition(Graph(3, [(0, 1), (1, 2), (2, 0)]))
    assert not bip.bipartite
    cyc = bip.odd_cycle
    assert len(cyc) % 2 == 1
    ok, why = verify_cycle(Graph(3, [(0, 1), (1, 2), (2, 0)]), cyc)
    assert ok, why


def test_bipartition_hypercube_by_parity():
    g = gen("hypercube", d=3)
    bip = bipartition(g)
    assert bip.bipartite
    side_of = {}
    for s, side in enumerate(bip.classes()):
        for v in side:
            side_of[v] = s
    for v in range(8):
        assert side_of[v] == side_of[0] if bin(v).count("1") % 2 == 0 else side_of[v] != side_of[0]


@given(st.integers(3, 15), st.integers(0, 5_000))
def test_odd_cycle_witness_always_verifies(n, seed):
    g = random_graph(n, Fraction(1, 2), seed)
    bip = bipartition(g)
    if not bip.bipartite:
        assert len(bip.odd_cycle) % 2 == 1
        ok, why = verify_cycle(g, bip.odd_cycle)
        assert ok, why


# ------------------------------------------------------------ layers


def test_bfs_layers_c6():
    layers = bfs_layers(gen("cycle", n=6), 0)
    assert [sorted(l) for l in layers.layers] == [[0], [1, 5], [2, 4], [3]]


def test_bfs_layers_k33():
    layers = bfs_layers(gen("complete_bipartite", a=3, b=3), 0)
    assert [sorted(l) for l in layers.layers] == [[0], [3, 4, 5], [1, 2]]


def test_bfs_layers_hypercube_binomials():
    g = gen("hypercube", d=8)
    layers = bfs_layers(g, 0)
    assert [len(l) for l in layers.layers] == [math.comb(8, i) for i in range(9)]


@given(st.integers(2, 30), st.integers(0, 3_000))
def test_bfs_layers_distance_is_graph_distance(n, seed):
    g = random_graph(n, Fraction(1, 4), seed)
    layers = bfs_layers(g, 0)
    # independent check: repeated relaxation over edges
    dist = [0 if v == 0 else None for v in range(n)]
    frontier = [0]
    d = 0
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors(u):
                if dist[w] is None:
                    dist[w] = d + 1
                    nxt.append(int(w))
        frontier = nxt
        d += 1
    for v in range(n):
        expect = -1 if dist[v] is None else dist[v]
        assert layers.dist[v] == expect


# ------------------------------------------------------------ radius


def test_radius_center_examples():
    assert radius_center(gen("cycle", n=6)) == (3, 0)
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert radius_center(star) == (1, 0)
    assert radius_center(gen("hypercube", d=8)) == (8, 0)


def test_radius_center_smallest_id_tie():
    g = gen("cycle", n=5)
    rad, center = radius_center(g)
    assert (rad, center) == (2, 0)


# ------------------------------------------------------------ bipartite half


def test_spanning_half_c4_keeps_everything():
    g = gen("cycle", n=4)
    h, _ = spanning_bipartite_half(g)
    assert h.m == 4


def test_spanning_half_triangle():
    g = Graph(3, [(0, 1), (1, 2), (2, 0)])
    h, _ = spanning_bipartite_half(g)
    assert h.m == 2


def test_spanning_half_k5():
    g = gen("complete", n=5)
    h, sides = spanning_bipartite_half(g)
    assert h.m >= 5
    assert bipartition(h).bipartite


@given(st.integers(2, 20), st.integers(0, 5_000))
def test_spanning_half_bounds(n, seed):
    g = random_graph(n, Fraction(1, 2), seed)
    h, sides = spanning_bipartite_half(g)
    assert h.m >= -(-g.m // 2)
    assert bipartition(h).bipartite
    deg_g = g.degrees()
    deg_h = h.degrees()
    for v in range(n):
        assert deg_h[v] >= -(-int(deg_g[v]) // 2)


# ------------------------------------------------------------ verify_cycle


def test_verify_cycle_examples():
    c6 = gen("cycle", n=6)
    assert verify_cycle(c6, [0, 1, 2, 3, 4, 5]) == (True, None)
    ok, why = verify_cycle(c6, [0, 1, 2])
    assert not ok and "edge" in why
    ok, why = verify_cycle(c6, [0, 1, 0])
    assert not ok and ("repeat" in why or "distinct" in why)
    ok, why = verify_cycle(c6, [0, 1])
    assert not ok


# ------------------------------------------------------------ components


def test_densest_component_picks_max_density():
    # a triangle (density 1) next to a long path (density < 1)
    edges = [(0, 1), (1, 2), (2, 0)] + [(i, i + 1) for i in range(3, 9)]
    g = Graph(10, edges)
    comp, orig = densest_component(g)
    assert comp.n == 3 and comp.m == 3
    assert sorted(int(x) for x in orig) == [0, 1, 2]
