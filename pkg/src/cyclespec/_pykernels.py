"""Pure-Python kernel implementations.

Mirror of the compiled extension ``cyclespec._kernels``; ``backend`` picks
one of the two at import time. The two implementations must stay
behaviorally identical, including every tie-break; the test suite compares
them output by output on seeded inputs. Adjacency comes in as CSR arrays
(indptr int64, indices int32) with neighbor lists sorted ascending.
"""

from __future__ import annotations

import numpy as np

_INF = 0x7FFFFFFF


def bfs_tree(indptr, indices, root):
    """BFS distances and parents from root; -1 marks unreached / no parent."""
    n = len(indptr) - 1
    ip = indptr.tolist()
    ix = indices.tolist()
    dist = [-1] * n
    parent = [-1] * n
    dist[root] = 0
    queue = [root]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(ip[u], ip[u + 1]):
            w = ix[p]
            if dist[w] < 0:
                dist[w] = du
                parent[w] = u
                queue.append(w)
    return (
        np.array(dist, dtype=np.int32),
        np.array(parent, dtype=np.int32),
    )


def ecc_all(indptr, indices):
    """Eccentricity of every vertex within its own component."""
    n = len(indptr) - 1
    ip = indptr.tolist()
    ix = indices.tolist()
    ecc = np.zeros(n, dtype=np.int32)
    seen = [-1] * n
    queue = [0] * n
    for r in range(n):
        seen[r] = r
        dist_r = 0
        queue[0] = r
        head = 0
        tail = 1
        dist = [0] * n
        dist[r] = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u] + 1
            for p in range(ip[u], ip[u + 1]):
                w = ix[p]
                if seen[w] != r:
                    seen[w] = r
                    dist[w] = du
                    if du > dist_r:
                        dist_r = du
                    queue[tail] = w
                    tail += 1
        ecc[r] = dist_r
    return ecc


def girth_csr(indptr, indices, want_witness):
    """Length of a shortest cycle, optionally with a witness cycle.

    Returns (g, vertices) where g = 0 and vertices is empty when the graph
    is acyclic. Scans roots ascending restricted to vertices >= root; the
    recorded witness is the first closure attaining the minimum under that
    scan order, so the result is deterministic.
    """
    n = len(indptr) - 1
    ip = indptr.tolist()
    ix = indices.tolist()
    best = _INF
    br = bu = bw = -1
    seen = [-1] * n
    dist = [0] * n
    parent = [-1] * n
    queue = [0] * n
    for r in range(n):
        if best == 3:
            break
        if ip[r + 1] - ip[r] < 2:
            continue
        seen[r] = r
        dist[r] = 0
        parent[r] = -1
        queue[0] = r
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du >= best - 1:
                break
            for p in range(ip[u], ip[u + 1]):
                w = ix[p]
                if w < r:
                    continue
                if seen[w] != r:
                    seen[w] = r
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if cand < best:
                        best = cand
                        br, bu, bw = r, u, w
    if best == _INF:
        return 0, np.zeros(0, dtype=np.int32)
    if not want_witness:
        return best, np.zeros(0, dtype=np.int32)
    # second pass: plain restricted BFS from the recorded root rebuilds the
    # same shortest-path tree (distances are unique, parents follow the same
    # ascending scan), then the closure edge (bu, bw) closes the cycle
    dist2 = [-1] * n
    par2 = [-1] * n
    dist2[br] = 0
    bfs_q = [br]
    head = 0
    while head < len(bfs_q):
        u = bfs_q[head]
        head += 1
        for p in range(ip[u], ip[u + 1]):
            w = ix[p]
            if w >= br and dist2[w] < 0 and w != br:
                dist2[w] = dist2[u] + 1
                par2[w] = u
                bfs_q.append(w)
    chain_u = [bu]
    while par2[chain_u[-1]] >= 0:
        chain_u.append(par2[chain_u[-1]])
    on_u = {v: i for i, v in enumerate(chain_u)}
    chain_w = [bw]
    while chain_w[-1] not in on_u:
        chain_w.append(par2[chain_w[-1]])
    lca = chain_w[-1]
    # cycle order: lca..bu down the tree, the closure edge, bw..child-of-lca
    cycle = list(reversed(chain_u[: on_u[lca] + 1])) + chain_w[:-1]
    return best, np.array(cycle, dtype=np.int32)


def peel_mindeg(indptr, indices, t):
    """Keep-mask of the maximal subgraph with all degrees >= t."""
    n = len(indptr) - 1
    ip = indptr.tolist()
    ix = indices.tolist()
    deg = [ip[v + 1] - ip[v] for v in range(n)]
    alive = np.ones(n, dtype=np.uint8)
    queue = [v for v in range(n) if deg[v] < t]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if not alive[v]:
            continue
        alive[v] = 0
        for p in range(ip[v], ip[v + 1]):
            w = ix[p]
            if alive[w]:
                deg[w] -= 1
                if deg[w] == t - 1:
                    queue.append(w)
    return alive


def peel_table(indptr, indices, dmin):
    """Keep-mask after size-dependent peeling.

    dmin[m] is the smallest acceptable degree while m vertices remain;
    each round deletes the smallest-id vertex below the current threshold
    and recomputes the threshold, so the result is order-canonical.
    """
    n = len(indptr) - 1
    deg = np.diff(indptr).astype(np.int64)
    alive = np.ones(n, dtype=bool)
    m = n
    while m > 0:
        th = dmin[m]
        cand = np.flatnonzero(alive & (deg < th))
        if cand.size == 0:
            break
        v = int(cand[0])
        alive[v] = False
        m -= 1
        nb = indices[indptr[v] : indptr[v + 1]]
        live_nb = nb[alive[nb]]
        deg[live_nb] -= 1
        deg[v] = 0
    return alive.astype(np.uint8)


def chord_case(L, r, chi):
    """Case analysis for the chord-path construction on a 2-colored cycle.

    Positions 0..L-1 carry colors chi (bit x = color of position x), the
    chord joins positions 0 and r with 2 <= r <= L/2. Returns
    (case, m, alpha):

      case 0: chi has no period below L; every length 1..L-1 has a
              chordless two-colored path (m = 0, alpha = 0)
      case 1: far chord, arm residue alpha, 0-arm descending / r-arm
              descending (always-feasible window)
      case 2: far chord, arm residue alpha, 0-arm ascending / r-arm
              ascending (always-feasible window)
      case 3: near chord (r <= m), both arms on the long arc
      case 4: no construction fires; chi is alternating and r is odd, and
              only odd lengths are realizable (alpha = -1)

    m is the least period of chi when one exists. Multiples of m are the
    lengths that need the chord; the chosen case realizes all of them.
    """
    full = (1 << L) - 1
    chi &= full
    m = 0
    for s in range(1, L):
        if (((chi >> s) | (chi << (L - s))) & full) == chi:
            m = s
            break
    if m == 0:
        return 0, 0, 0
    if r <= m:
        for alpha in range(m):
            x = (chi >> ((L - alpha) % L)) & 1
            y = (chi >> ((r - 1 - alpha + L) % L)) & 1
            if x != y:
                return 3, m, alpha
        return 4, m, -1
    for alpha in range(m):
        x = (chi >> ((L - alpha) % L)) & 1
        if x != ((chi >> ((r + 1 + alpha) % L)) & 1):
            return 1, m, alpha
        if ((chi >> alpha) & 1) != ((chi >> ((r - 1 - alpha + L) % L)) & 1):
            return 2, m, alpha
    return 4, m, -1


def chord_case_sweep(L, r):
    """chord_case over every nontrivial coloring; returns (case, m) arrays."""
    if L > 24:
        raise ValueError(f"sweep size 2^{L} is too large")
    size = 1 << L
    case_arr = np.zeros(size, dtype=np.uint8)
    m_arr = np.zeros(size, dtype=np.uint8)
    for chi in range(1, size - 1):
        c, m, _ = chord_case(L, r, chi)
        case_arr[chi] = c
        m_arr[chi] = m
    return case_arr, m_arr
