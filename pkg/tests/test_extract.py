"""Dense-substructure extraction: cores, paths, chorded cycles, balls."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gen, random_graph
from cyclespec.errors import HypothesisNotMet, InputError, InternalContradiction
from cyclespec.extract import (
    ChordedCycle,
    chorded_cycle,
    core_peel,
    dense_ball,
    dense_layer_pair,
    maximal_path,
    short_cycle,
    validate_chorded_cycle,
)
from cyclespec.graph import Graph, average_degree
from cyclespec.metrics import bfs_layers, girth, verify_cycle


# ------------------------------------------------------------ core_peel


def test_core_peel_keeps_min_degree():
    g = gen("complete", n=5)
    core = core_peel(g, 2)
    assert core.n == 5 and core.m == 10


def test_core_peel_drops_pendants():
    # triangle with a pendant path hanging off vertex 0
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
    core = core_peel(g, 1)
    assert core.n == 3
    assert sorted(int(x) for x in core.meta["orig_ids"]) == [0, 1, 2]
    assert all(core.degree(v) >= 2 for v in range(core.n))


def test_core_peel_sparse_graph_is_refused():
    with pytest.raises(HypothesisNotMet, match="average degree"):
        core_peel(gen("complete_bipartite", a=1, b=9), 2)
    with pytest.raises(HypothesisNotMet):
        core_peel(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]), 1)


def test_core_peel_bad_args():
    with pytest.raises(InputError):
        core_peel(gen("complete", n=4), 0)
    with pytest.raises(InputError):
        core_peel(Graph(0, []), 1)


@given(st.integers(4, 25), st.integers(0, 2_000))
def test_core_peel_invariants(n, seed):
    g = random_graph(n, Fraction(1, 2), seed)
    try:
        core = core_peel(g, 2)
    except HypothesisNotMet:
        assert average_degree(g) < 4 if g.n else True
        return
    orig = core.meta["orig_ids"]
    assert all(core.degree(v) >= 3 for v in range(core.n))
    keep = set(int(x) for x in orig)
    # maximality: every dropped vertex dies in the re-run of the peel
    for v in range(core.n):
        host_nbrs = {int(w) for w in g.neighbors(int(orig[v]))}
        assert {int(orig[w]) for w in core.neighbors(v)} == host_nbrs & keep


# ------------------------------------------------------------ maximal_path


def test_maximal_path_examples():
    assert maximal_path(gen("complete", n=4)) == [2, 0, 1, 3]
    assert maximal_path(gen("cycle", n=6)) == [4, 5, 0, 1, 2, 3]


@given(st.integers(2, 25), st.integers(0, 2_000))
def test_maximal_path_cannot_grow(n, seed):
    g = random_graph(n, Fraction(2, 5), seed)
    path = maximal_path(g)
    assert len(set(path)) == len(path)
    for u, v in zip(path, path[1:]):
        assert g.has_edge(u, v)
    on = set(path)
    for end in (path[0], path[-1]):
        assert all(int(w) in on for w in g.neighbors(end))


# ------------------------------------------------------------ chorded_cycle


def test_chorded_cycle_hypercube4():
    cc = chorded_cycle(gen("hypercube", d=4), 2)
    assert cc.cycle == (14, 10, 8, 12, 4, 6, 2, 0, 1, 3, 7, 5, 13, 9, 11, 15)
    assert cc.chord == (0, 3)
    assert cc.girth_used == 4 and cc.core_size == 16
    assert cc.length >= (cc.girth_used - 2) * 2 + 2


def test_chorded_cycle_k55():
    cc = chorded_cycle(gen("complete_bipartite", a=5, b=5), 2)
    assert cc.cycle == (4, 8, 2, 6, 0, 5, 1, 7, 3, 9)
    assert cc.chord == (0, 3)
    assert cc.girth_used == 4 and cc.core_size == 10


def test_chorded_cycle_refuses_sparse():
    with pytest.raises(HypothesisNotMet):
        chorded_cycle(gen("complete_bipartite", a=1, b=9), 2)
    with pytest.raises(InputError):
        chorded_cycle(gen("complete", n=6), 1)


@given(st.integers(0, 300))
def test_chorded_cycle_random_dense(seed):
    g = gen("random_bipartite", n1=14, n2=14, p="2/3", seed=seed)
    if average_degree(g) < 4:
        return
    cc = chorded_cycle(g, 2)
    validate_chorded_cycle(g, cc)
    assert cc.length >= (cc.girth_used - 2) * 2 + 2
    assert girth(g) <= cc.girth_used or cc.core_size < g.n


# ------------------------------------------------------------ validation negatives


def test_validate_chorded_cycle_rejects_defects():
    g = gen("complete_bipartite", a=3, b=3)
    good = ChordedCycle(cycle=(0, 3, 1, 4), chord=(0, 2), girth_used=4, core_size=6)
    with pytest.raises(InternalContradiction, match="host edge"):
        # positions 0 and 2 are vertices 0 and 1: same side, no edge
        validate_chorded_cycle(g, good)
    bad_cycle = ChordedCycle(cycle=(0, 1, 3, 4), chord=(0, 2), girth_used=4, core_size=6)
    with pytest.raises(InternalContradiction, match="verification"):
        validate_chorded_cycle(g, bad_cycle)
    adjacent = ChordedCycle(cycle=(0, 3, 1, 4), chord=(0, 3), girth_used=4, core_size=6)
    with pytest.raises(InternalContradiction, match="adjacent"):
        validate_chorded_cycle(g, adjacent)


# ------------------------------------------------------------ dense_ball


def test_dense_ball_complete_bipartite_boundary():
    # e = 1024 equals 2 * 64^(3/2) exactly: the gate holds with equality
    g = gen("complete_bipartite", a=32, b=32)
    ball = dense_ball(g, 2, 2)
    assert ball.subgraph.n == 64 and ball.subgraph.m == 1024
    assert ball.center == 0 and ball.radius_bound == 2
    assert ball.achieved_avg_degree == 32
    assert ball.trace["radius"] == 2


def test_dense_ball_strict_gate_refusals():
    with pytest.raises(HypothesisNotMet, match="too few edges"):
        dense_ball(gen("cycle", n=7), 2, 2)
    with pytest.raises(HypothesisNotMet):
        dense_ball(gen("complete", n=5), 2, 2)


def test_dense_ball_forced_can_still_fail():
    with pytest.raises(HypothesisNotMet, match="peel emptied"):
        dense_ball(gen("cycle", n=7), 2, 2, strict=False)


def test_dense_ball_forced_success_below_gate():
    g = gen("complete", n=6)  # e=15 < 2*6^1.5, but the whole graph is dense
    ball = dense_ball(g, 2, 2, strict=False)
    assert ball.subgraph.n == 6 and ball.achieved_avg_degree == 5


def test_dense_ball_bad_args():
    with pytest.raises(InputError):
        dense_ball(gen("complete", n=4), Fraction(1, 2), 2)
    with pytest.raises(InputError):
        dense_ball(gen("complete", n=4), 2, 0)
    with pytest.raises(InputError):
        dense_ball(Graph(0, []), 2, 2)


@given(st.integers(0, 200))
def test_dense_ball_radius_is_real(seed):
    g = random_graph(40, Fraction(2, 3), seed)
    try:
        ball = dense_ball(g, 2, 2)
    except HypothesisNotMet:
        return
    assert ball.achieved_avg_degree >= 2
    sub = ball.subgraph
    layers = bfs_layers(g, ball.center)
    for hid in sub.meta["orig_ids"]:
        assert 0 <= layers.dist[int(hid)] <= ball.radius_bound


# ------------------------------------------------------------ short_cycle


def test_short_cycle_complete_bipartite():
    g = gen("complete_bipartite", a=32, b=32)
    cyc = short_cycle(g, 2)
    assert cyc == [0, 33, 1, 32]
    assert verify_cycle(g, cyc) == (True, None)


def test_short_cycle_refusals():
    with pytest.raises(HypothesisNotMet):
        short_cycle(gen("cycle", n=7), 2)
    with pytest.raises(HypothesisNotMet):
        short_cycle(gen("complete", n=5), 2)


def test_short_cycle_forced():
    cyc = short_cycle(gen("complete", n=6), 2, strict=False)
    assert len(cyc) <= 5
    assert verify_cycle(gen("complete", n=6), cyc) == (True, None)


# ------------------------------------------------------------ dense_layer_pair


def test_dense_layer_pair_hypercube():
    g = gen("hypercube", d=8)
    l, sub = dense_layer_pair(g, bfs_layers(g, 0), 2)
    assert (l, sub.n, sub.m) == (2, 84, 168)


def test_dense_layer_pair_complete_bipartite():
    g = gen("complete_bipartite", a=8, b=8)
    l, sub = dense_layer_pair(g, bfs_layers(g, 0), 2)
    assert (l, sub.n, sub.m) == (1, 15, 56)
    host_ids = set(int(x) for x in sub.meta["orig_ids"])
    assert 0 not in host_ids and len(host_ids) == 15


def test_dense_layer_pair_sparse_refused():
    g = gen("cycle", n=8)
    with pytest.raises(HypothesisNotMet):
        dense_layer_pair(g, bfs_layers(g, 0), 1)


def test_dense_layer_pair_needs_full_cover():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError, match="cover"):
        dense_layer_pair(g, bfs_layers(g, 0), 1)
    with pytest.raises(InputError):
        dense_layer_pair(gen("cycle", n=4), bfs_layers(gen("cycle", n=4), 0), 0)


@given(st.integers(0, 200))
def test_dense_layer_pair_density_claim(seed):
    g = gen("random_bipartite", n1=30, n2=30, p="1/3", seed=seed)
    layers = bfs_layers(g, 0)
    if int(layers.dist.min()) < 0:
        return
    try:
        l, sub = dense_layer_pair(g, layers, 2)
    except HypothesisNotMet:
        return
    assert sub.m >= 2 * sub.n
    for hid in sub.meta["orig_ids"]:
        assert layers.dist[int(hid)] in (l, l + 1)
