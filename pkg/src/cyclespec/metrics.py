"""Graph queries: BFS structure, radius, girth, parity girth, bipartiteness.

Everything here is deterministic: roots scan ascending, neighbor lists are
ascending, and every reported witness is the first one the canonical scan
order encounters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backend import kernels
from .errors import BudgetExceeded, InputError
from .graph import Graph


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layering from a root: dist/parent arrays plus per-depth id arrays."""

    root: int
    dist: np.ndarray
    parent: np.ndarray
    layers: list

    @property
    def depth(self) -> int:
        return len(self.layers) - 1


@dataclass(frozen=True)
class BipartitionResult:
    bipartite: bool
    sides: np.ndarray | None
    odd_cycle: list | None

    def classes(self) -> tuple[list, list]:
        if not self.bipartite:
            raise InputError("no 2-coloring: graph has an odd cycle")
        return (
            np.flatnonzero(self.sides == 0).tolist(),
            np.flatnonzero(self.sides == 1).tolist(),
        )


def bfs(g: Graph, root: int) -> tuple[np.ndarray, np.ndarray]:
    """Distances and parents from root (-1 where unreached)."""
    if not (0 <= root < g.n):
        raise InputError("BFS root out of range")
    return kernels.bfs_tree(g.indptr, g.indices, root)


def bfs_layers(g: Graph, root: int) -> LayerDecomposition:
    dist, parent = bfs(g, root)
    depth = int(dist.max()) if g.n else 0
    layers = [np.flatnonzero(dist == d) for d in range(depth + 1)]
    return LayerDecomposition(root=root, dist=dist, parent=parent, layers=layers)


def eccentricities(g: Graph) -> np.ndarray:
    """Per-vertex eccentricity within its component."""
    return kernels.ecc_all(g.indptr, g.indices)


def radius_center(g: Graph) -> tuple[int, int]:
    """(radius, center) of a connected graph; center is the smallest argmin."""
    if g.n == 0:
        raise InputError("radius of the empty graph is undefined")
    if len(g.components()) != 1:
        raise InputError("radius_center needs a connected graph")
    ecc = eccentricities(g)
    center = int(np.argmin(ecc))
    return int(ecc[center]), center


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, math.inf for forests."""
    val, _ = kernels.girth_csr(g.indptr, g.indices, False)
    return math.inf if val == 0 else int(val)


def shortest_cycle(g: Graph) -> list | None:
    """A shortest cycle as a vertex list, None for forests."""
    val, wit = kernels.girth_csr(g.indptr, g.indices, True)
    if val == 0:
        return None
    cycle = [int(x) for x in wit]
    if len(cycle) != val:
        raise InputError("internal girth witness mismatch")
    return cycle


def bipartition(g: Graph) -> BipartitionResult:
    """2-color the graph or return the first odd cycle the BFS scan meets."""
    sides = np.full(g.n, -1, dtype=np.int8)
    for root in range(g.n):
        if sides[root] >= 0:
            continue
        sides[root] = 0
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in g.neighbors(u):
                w = int(w)
                if sides[w] < 0:
                    sides[w] = 1 - sides[u]
                    parent[w] = u
                    queue.append(w)
                elif sides[w] == sides[u] and w != parent[u]:
                    return BipartitionResult(False, None, _assemble_closure(parent, u, w))
    return BipartitionResult(True, sides.astype(np.uint8), None)


def _assemble_closure(parent, u: int, w: int) -> list:
    """Cycle through tree paths of u and w plus the edge (u, w)."""
    chain_u = [u]
    while parent[chain_u[-1]] >= 0:
        chain_u.append(parent[chain_u[-1]])
    index_u = {v: i for i, v in enumerate(chain_u)}
    chain_w = [w]
    while chain_w[-1] not in index_u:
        chain_w.append(parent[chain_w[-1]])
    lca = chain_w[-1]
    return list(reversed(chain_u[: index_u[lca] + 1])) + chain_w[:-1]


def verify_cycle(g: Graph, cycle) -> tuple[bool, str | None]:
    """Check a vertex sequence is a simple cycle of g."""
    seq = [int(x) for x in cycle]
    if len(seq) < 3:
        return False, f"cycle too short: {len(seq)} vertices"
    if len(set(seq)) != len(seq):
        return False, "repeated vertex"
    for x in seq:
        if not (0 <= x < g.n):
            return False, f"vertex {x} out of range"
    for i, x in enumerate(seq):
        y = seq[(i + 1) % len(seq)]
        if not g.has_edge(x, y):
            return False, f"missing edge ({x}, {y})"
    return True, None


def densest_component(g: Graph) -> tuple[Graph, np.ndarray]:
    """Component with maximum average degree; ties go to the earliest one."""
    if g.n == 0:
        raise InputError("empty graph has no components")
    comps = g.components()
    best = None
    best_ratio = Fraction(-1)
    for comp in comps:
        inset = np.zeros(g.n, dtype=bool)
        inset[comp] = True
        mc = int(np.count_nonzero(inset[g.edge_u] & inset[g.edge_v]))
        ratio = Fraction(mc, int(comp.size))
        if ratio > best_ratio:
            best_ratio = ratio
            best = comp
    return g.subgraph(best)


def spanning_bipartite_half(g: Graph) -> tuple[Graph, np.ndarray]:
    """Spanning bipartite subgraph keeping at least half the edges.

    Greedy local moves: start with everything on side 0 and repeatedly flip
    any vertex with more same-side than cross-side neighbors, scanning ids
    ascending until a full pass makes no flip. At the fixpoint every vertex
    has at least half its degree crossing, so the cut keeps >= m/2 edges.
    """
    sides = np.zeros(g.n, dtype=np.uint8)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            nb = g.neighbors(v)
            if nb.size == 0:
                continue
            same = int(np.count_nonzero(sides[nb] == sides[v]))
            if 2 * same > nb.size:
                sides[v] ^= 1
                changed = True
    keep = sides[g.edge_u] != sides[g.edge_v]
    edges = np.stack([g.edge_u[keep], g.edge_v[keep]], axis=1)
    return Graph(g.n, edges), sides


def even_girth(g: Graph, budget: int | None = None) -> int | float:
    """Length of a shortest even cycle, math.inf if none exists.

    Shortcuts: an even girth is its own answer, and bipartite graphs have
    even girth equal to girth. Otherwise even cycles live exactly in the
    biconnected blocks that are even-cycle blocks or have more edges than
    vertices, and those blocks are searched exactly (canonical-root DFS
    with parity-aware BFS lower bounds). Exact always; the block search is
    superpolynomial in the worst case, which no density pipeline hits
    because none of them calls this.
    """
    base = girth(g)
    if base == math.inf:
        return math.inf
    if base % 2 == 0:
        return int(base)
    best = math.inf
    for block in _biconnected_edge_blocks(g):
        verts = sorted({x for e in block for x in e})
        ne, nv = len(block), len(verts)
        if ne == nv:
            if nv % 2 == 0:
                best = min(best, nv)
            continue
        if ne > nv:
            sub, _ = g.subgraph(verts)
            best = min(best, _shortest_even_cycle_exact(sub, best, budget))
    return best


def _biconnected_edge_blocks(g: Graph) -> list:
    """Edge lists of the biconnected blocks (iterative lowpoint DFS)."""
    num = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    counter = 0
    blocks = []
    estack = []
    for root in range(g.n):
        if num[root] >= 0:
            continue
        num[root] = low[root] = counter
        counter += 1
        stack = [(root, 0)]
        while stack:
            u, pi = stack[-1]
            nbrs = g.neighbors(u)
            if pi < nbrs.size:
                stack[-1] = (u, pi + 1)
                w = int(nbrs[pi])
                if num[w] < 0:
                    estack.append((u, w))
                    num[w] = low[w] = counter
                    counter += 1
                    parent[w] = u
                    stack.append((w, 0))
                elif w != parent[u] and num[w] < num[u]:
                    estack.append((u, w))
                    if num[w] < low[u]:
                        low[u] = num[w]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= num[p]:
                        blk = []
                        while estack:
                            e = estack.pop()
                            blk.append(e)
                            if e == (p, u):
                                break
                        if blk:
                            blocks.append(blk)
    return blocks


def _shortest_even_cycle_exact(h: Graph, ub: int | float, budget: int | None) -> int | float:
    """Shortest even cycle in h by exact search, pruned below ub."""
    best = ub
    spent = 0
    for v in range(h.n):
        if best == 4:
            break
        if h.degree(v) < 2:
            continue
        dist2 = _parity_dist(h, v)
        visited = np.zeros(h.n, dtype=bool)
        visited[v] = True
        path = [v]
        iters = [iter(h.neighbors(v).tolist())]
        while iters:
            spent += 1
            if budget is not None and spent > budget:
                raise BudgetExceeded(
                    "even-girth search exceeded its work budget",
                    {"budget": budget},
                )
            try:
                w = next(iters[-1])
            except StopIteration:
                visited[path[-1]] = False
                path.pop()
                iters.pop()
                continue
            if w < v:
                continue
            c = len(path) - 1
            if w == v:
                if c >= 2 and (c + 1) % 2 == 0 and c + 1 < best:
                    best = c + 1
                continue
            if visited[w]:
                continue
            lb = dist2[2 * w + (c + 1) % 2]
            if lb >= best - c - 1:
                continue
            visited[w] = True
            path.append(w)
            iters.append(iter(h.neighbors(w).tolist()))
    return best


def _parity_dist(h: Graph, v: int) -> list:
    """dist2[2u+p]: shortest v-to-u walk length of parity p on vertices >= v."""
    big = 1 << 30
    dist2 = [big] * (2 * h.n)
    dist2[2 * v] = 0
    queue = [(v, 0)]
    head = 0
    while head < len(queue):
        u, p = queue[head]
        head += 1
        d = dist2[2 * u + p]
        for w in h.neighbors(u):
            w = int(w)
            if w < v:
                continue
            q = 1 - p
            if dist2[2 * w + q] > d + 1:
                dist2[2 * w + q] = d + 1
                queue.append((w, q))
    return dist2
