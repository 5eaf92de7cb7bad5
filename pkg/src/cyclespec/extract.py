"""Constructive subgraph extraction.

Four building blocks used by the spectrum drivers: minimum-degree cores via
peeling, non-extendable paths, long chorded cycles from dense graphs, and
dense low-radius balls. Each returns host-graph vertex ids; operations that
return a Graph carry the new-id-to-host-id map in meta["orig_ids"].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .backend import kernels
from .errors import HypothesisNotMet, InputError, InternalContradiction
from .graph import Graph, average_degree
from .metrics import LayerDecomposition, _assemble_closure, girth, verify_cycle


@dataclass(frozen=True)
class ChordedCycle:
    """A cycle c_0..c_{L-1} (host ids, cyclic order) with one extra edge
    between the cycle positions in `chord`."""

    cycle: tuple
    chord: tuple
    girth_used: int
    core_size: int

    @property
    def length(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class DenseBall:
    """An induced subgraph of average degree >= the requested c, all of it
    within distance radius_bound of center (a host id)."""

    subgraph: Graph
    center: int
    radius_bound: int
    achieved_avg_degree: Fraction
    trace: dict = field(default_factory=dict)


def validate_chorded_cycle(g: Graph, cc: ChordedCycle) -> None:
    """Assert cc is a genuine chorded cycle of g; raise on any defect."""
    ok, why = verify_cycle(g, cc.cycle)
    if not ok:
        raise InternalContradiction(f"chorded cycle failed verification: {why}")
    L = cc.length
    i, j = cc.chord
    if not (0 <= i < L and 0 <= j < L):
        raise InternalContradiction(f"chord positions {cc.chord} out of range")
    if (j - i) % L in (0, 1, L - 1):
        raise InternalContradiction(f"chord {cc.chord} joins adjacent positions")
    if not g.has_edge(int(cc.cycle[i]), int(cc.cycle[j])):
        raise InternalContradiction(f"chord {cc.chord} is not a host edge")


def core_peel(g: Graph, k: int) -> Graph:
    """Largest induced subgraph with minimum degree >= k+1.

    Deletes degree <= k vertices in queue (id) order until none remain.
    Empty result means the graph was too sparse to hold a core.
    """
    if k < 1:
        raise InputError(f"core_peel needs k >= 1, got {k}")
    if g.n == 0:
        raise InputError("core_peel on the empty graph")
    alive = kernels.peel_mindeg(g.indptr, g.indices, k + 1)
    keep = np.flatnonzero(alive)
    if keep.size == 0:
        avg = average_degree(g)
        if avg >= 2 * k:
            raise InternalContradiction(
                f"peel emptied a graph of average degree {avg} >= {2 * k}"
            )
        raise HypothesisNotMet(
            f"no subgraph of minimum degree {k + 1}: average degree "
            f"{avg} < {2 * k}",
            average_degree=str(avg),
            required=str(2 * k),
        )
    sub, orig = g.subgraph(keep)
    sub.meta["orig_ids"] = orig
    return sub


def maximal_path(g: Graph) -> list:
    """A simple path extendable at neither end.

    Starts at the smallest id, takes the smallest-id unused neighbor, and
    then alternates between the two ends, falling back to the stuck end's
    opposite when one side cannot grow.
    """
    if g.n == 0:
        raise InputError("maximal_path on the empty graph")
    start = 0
    path = [start]
    used = bytearray(g.n)
    used[start] = 1

    def grow(at_head: bool) -> bool:
        end = path[0] if at_head else path[-1]
        for w in g.neighbors(end):
            if not used[int(w)]:
                w = int(w)
                used[w] = 1
                if at_head:
                    path.insert(0, w)
                else:
                    path.append(w)
                return True
        return False

    if not grow(at_head=False):
        return path
    last_head = False
    while True:
        if grow(at_head=not last_head):
            last_head = not last_head
        elif grow(at_head=last_head):
            pass
        else:
            return path


def chorded_cycle(g: Graph, k: int) -> ChordedCycle:
    """A cycle of length >= (g'-2)k + 2 carrying a chord, where g' is the
    girth of the min-degree-(k+1) core."""
    if k < 2:
        raise InputError(f"chorded_cycle needs k >= 2, got {k}")
    core = core_peel(g, k)
    gp = girth(core)
    if gp is math.inf:
        raise InternalContradiction("min degree >= 3 core has no cycle")
    gp = int(gp)
    path = maximal_path(core)
    v = path[0]
    pos = {x: i for i, x in enumerate(path)}
    hits = sorted(pos[int(w)] for w in core.neighbors(v) if int(w) in pos)
    if len(hits) != core.degree(v):
        raise InternalContradiction("maximal path endpoint has an off-path neighbor")
    if len(hits) < k + 1:
        raise InternalContradiction(
            f"path endpoint degree {len(hits)} < {k + 1} inside the core"
        )
    far = hits[-1]
    if far < (gp - 2) * k + 1:
        raise InternalContradiction(
            f"farthest path-neighbor at {far} < (g'-2)k+1 = {(gp - 2) * k + 1}"
        )
    length = far + 1
    inner = [i for i in hits if i not in (1, far)]
    nearest = min(inner, key=lambda j: (min(j, length - j), j))
    orig = core.meta["orig_ids"]
    cc = ChordedCycle(
        cycle=tuple(int(orig[x]) for x in path[: far + 1]),
        chord=(0, nearest),
        girth_used=gp,
        core_size=core.n,
    )
    validate_chorded_cycle(g, cc)
    return cc


def _ceil_pow_gate(e: int, n: int, p: int, q: int, k: int) -> bool:
    """Exact test e >= (p/q) * n^(1 + 1/k), by k-th powers."""
    return (e * q) ** k >= p**k * n ** (k + 1)


def dense_ball(g: Graph, c, k: int, strict: bool = True) -> DenseBall:
    """A subgraph of average degree >= c within distance k of one vertex.

    Peels low-degree vertices against a threshold recomputed from the
    current vertex count, then grows balls from the smallest survivor until
    the density target is met; the growth argument caps the radius at k.
    """
    c = Fraction(c)
    if c < 1:
        raise InputError(f"dense_ball needs c >= 1, got {c}")
    if k < 1:
        raise InputError(f"dense_ball needs k >= 1, got {k}")
    if g.n == 0:
        raise InputError("dense_ball on the empty graph")
    p, q = c.numerator, c.denominator
    gate = _ceil_pow_gate(g.m, g.n, p, q, k)
    if strict and not gate:
        raise HypothesisNotMet(
            f"too few edges: e={g.m} < {c} * n^(1+1/{k}) with n={g.n}",
            e=g.m,
            n=g.n,
            c=str(c),
            k=k,
        )

    # dmin[m] = least degree a vertex may keep when m vertices remain
    dmin = np.zeros(g.n + 1, dtype=np.int64)
    d = 0
    for m in range(1, g.n + 1):
        while (d * q) ** k < p**k * m:
            d += 1
        dmin[m] = d
    alive = kernels.peel_table(g.indptr, g.indices, dmin)
    keep = np.flatnonzero(alive)
    if keep.size == 0:
        if gate:
            raise InternalContradiction(
                "density peel emptied a graph that met the size hypothesis"
            )
        raise HypothesisNotMet(
            f"density peel emptied the graph: e={g.m} is below {c} * n^(1+1/{k})",
            e=g.m,
            n=g.n,
            c=str(c),
            k=k,
        )
    sub, sub_orig = g.subgraph(keep)

    dist, _parent = kernels.bfs_tree(sub.indptr, sub.indices, 0)
    maxd = int(dist.max())
    reach = dist >= 0
    sizes = np.bincount(dist[reach], minlength=maxd + 1).cumsum()
    eu, ev = dist[sub.edge_u], dist[sub.edge_v]
    in_ball = (eu >= 0) & (ev >= 0)
    edge_depth = np.maximum(eu, ev)[in_ball]
    edges = np.bincount(edge_depth, minlength=maxd + 1).cumsum()

    r = -1
    for i in range(maxd + 1):
        if 2 * int(edges[i]) * q >= p * int(sizes[i]):
            r = i
            break
    if r < 0 or r > k:
        raise InternalContradiction(
            f"ball density never reached {c}/2 within radius {k} (r={r})"
        )
    ball_ids = np.flatnonzero((dist >= 0) & (dist <= r))
    ball, ball_orig = sub.subgraph(ball_ids)
    ball.meta["orig_ids"] = sub_orig[ball_orig]
    achieved = Fraction(2 * ball.m, ball.n)
    if achieved < c:
        raise InternalContradiction(
            f"ball average degree {achieved} fell below the target {c}"
        )
    return DenseBall(
        subgraph=ball,
        center=int(sub_orig[0]),
        radius_bound=k,
        achieved_avg_degree=achieved,
        trace={
            "sizes": [int(x) for x in sizes[: maxd + 1]],
            "edges": [int(x) for x in edges[: maxd + 1]],
            "radius": r,
            "peeled_n": sub.n,
        },
    )


def short_cycle(g: Graph, k: int, strict: bool = True) -> list:
    """A cycle of length <= 2k+1, found inside a dense low-radius ball."""
    if k < 2:
        raise InputError(f"short_cycle needs k >= 2, got {k}")
    ball = dense_ball(g, 2, k, strict=strict)
    h = ball.subgraph
    horig = h.meta["orig_ids"]
    center = int(np.flatnonzero(horig == ball.center)[0])

    parent = np.full(h.n, -2, dtype=np.int64)
    parent[center] = -1
    queue = [center]
    qi = 0
    hit = None
    while qi < len(queue) and hit is None:
        u = queue[qi]
        qi += 1
        for w in h.neighbors(u):
            w = int(w)
            if parent[w] == -2:
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                hit = (u, w)
                break
    if hit is None:
        raise InternalContradiction("dense ball has no cycle")
    cycle = [int(horig[x]) for x in _assemble_closure(parent, *hit)]
    ok, why = verify_cycle(g, cycle)
    if not ok:
        raise InternalContradiction(f"short cycle failed verification: {why}")
    if len(cycle) > 2 * k + 1:
        raise InternalContradiction(
            f"short cycle has length {len(cycle)} > {2 * k + 1}"
        )
    return cycle


def dense_layer_pair(
    g: Graph, layers: LayerDecomposition, k: int
) -> tuple[int, Graph]:
    """Smallest l whose two consecutive BFS layers induce a subgraph with at
    least k vertices-worth of edges, plus that subgraph."""
    if k < 1:
        raise InputError(f"dense_layer_pair needs k >= 1, got {k}")
    dist = layers.dist
    if g.n == 0 or int(dist.min()) < 0:
        raise InputError("layer decomposition must cover the whole graph")
    depth = layers.depth
    du, dv = dist[g.edge_u], dist[g.edge_v]
    lmin = np.minimum(du, dv)
    span = np.maximum(du, dv) - lmin
    if span.size and int(span.max()) > 1:
        raise InternalContradiction("edge jumps more than one BFS layer")
    cross = np.bincount(lmin[span == 1], minlength=depth + 2)
    intra = np.bincount(lmin[span == 0], minlength=depth + 2)
    sizes = np.bincount(dist, minlength=depth + 2)
    for l in range(depth):
        e_pair = int(cross[l] + intra[l] + intra[l + 1])
        n_pair = int(sizes[l] + sizes[l + 1])
        if e_pair >= k * n_pair:
            ids = np.flatnonzero((dist == l) | (dist == l + 1))
            sub, orig = g.subgraph(ids)
            sub.meta["orig_ids"] = orig
            return l, sub
    raise HypothesisNotMet(
        f"no consecutive layer pair reaches {k} edges per vertex "
        f"(average degree {average_degree(g)} < {4 * k}?)",
        k=k,
        depth=depth,
    )
