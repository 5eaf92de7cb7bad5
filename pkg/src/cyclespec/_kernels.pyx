# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel implementations.

Byte-for-byte behavioral mirror of ``cyclespec._pykernels``: same
signatures, same return dtypes, same tie-breaks. Adjacency comes in as
CSR arrays (indptr int64, indices int32) with neighbor lists sorted
ascending.
"""

import numpy as np

cdef int _INF = 0x7FFFFFFF


def bfs_tree(indptr, indices, root):
    """BFS distances and parents from root; -1 marks unreached / no parent."""
    cdef long long[::1] ip = indptr
    cdef int[::1] ix = indices
    cdef Py_ssize_t n = ip.shape[0] - 1
    dist_a = np.full(n, -1, dtype=np.int32)
    parent_a = np.full(n, -1, dtype=np.int32)
    queue_a = np.zeros(n, dtype=np.int32)
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef Py_ssize_t head = 0, tail = 0
    cdef int u, w, du
    cdef long long p
    dist[root] = 0
    queue[tail] = root
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for p in range(ip[u], ip[u + 1]):
            w = ix[p]
            if dist[w] < 0:
                dist[w] = du
                parent[w] = u
                queue[tail] = w
                tail += 1
    return dist_a, parent_a


def ecc_all(indptr, indices):
    """Eccentricity of every vertex within its own component."""
    cdef long long[::1] ip = indptr
    cdef int[::1] ix = indices
    cdef Py_ssize_t n = ip.shape[0] - 1
    ecc_a = np.zeros(n, dtype=np.int32)
    cdef int[::1] ecc = ecc_a
    seen_a = np.full(n, -1, dtype=np.int64)
    dist_a = np.zeros(n, dtype=np.int32)
    queue_a = np.zeros(n, dtype=np.int32)
    cdef long long[::1] seen = seen_a
    cdef int[::1] dist = dist_a
    cdef int[::1] queue = queue_a
    cdef Py_ssize_t r, head, tail
    cdef int u, w, du, dist_r
    cdef long long p
    for r in range(n):
        seen[r] = r
        dist_r = 0
        queue[0] = r
        head = 0
        tail = 1
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
    return ecc_a


def girth_csr(indptr, indices, want_witness):
    """Length of a shortest cycle, optionally with a witness cycle.

    Returns (g, vertices) where g = 0 and vertices is empty when the graph
    is acyclic. Scans roots ascending restricted to vertices >= root; the
    recorded witness is the first closure attaining the minimum under that
    scan order, so the result is deterministic.
    """
    cdef long long[::1] ip = indptr
    cdef int[::1] ix = indices
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef int best = _INF
    cdef int br = -1, bu = -1, bw = -1
    seen_a = np.full(n, -1, dtype=np.int64)
    dist_a = np.zeros(n, dtype=np.int32)
    parent_a = np.full(n, -1, dtype=np.int32)
    queue_a = np.zeros(n, dtype=np.int32)
    cdef long long[::1] seen = seen_a
    cdef int[::1] dist = dist_a
    cdef int[::1] parent = parent_a
    cdef int[::1] queue = queue_a
    cdef Py_ssize_t r, head, tail
    cdef int u, w, du, cand
    cdef long long p
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
    dist2_a = np.full(n, -1, dtype=np.int32)
    par2_a = np.full(n, -1, dtype=np.int32)
    cdef int[::1] dist2 = dist2_a
    cdef int[::1] par2 = par2_a
    cdef Py_ssize_t h2 = 0, t2 = 0
    dist2[br] = 0
    queue[t2] = br
    t2 += 1
    while h2 < t2:
        u = queue[h2]
        h2 += 1
        for p in range(ip[u], ip[u + 1]):
            w = ix[p]
            if w >= br and dist2[w] < 0 and w != br:
                dist2[w] = dist2[u] + 1
                par2[w] = u
                queue[t2] = w
                t2 += 1
    chain_pos_a = np.full(n, -1, dtype=np.int32)
    cdef int[::1] chain_pos = chain_pos_a
    chain_u = [bu]
    cdef int v = bu
    chain_pos[v] = 0
    while par2[v] >= 0:
        v = par2[v]
        chain_pos[v] = len(chain_u)
        chain_u.append(v)
    chain_w = [bw]
    v = bw
    while chain_pos[v] < 0:
        v = par2[v]
        chain_w.append(v)
    cdef int lca_idx = chain_pos[v]
    cycle = list(reversed(chain_u[: lca_idx + 1])) + chain_w[:-1]
    return best, np.array(cycle, dtype=np.int32)


def peel_mindeg(indptr, indices, t):
    """Keep-mask of the maximal subgraph with all degrees >= t."""
    cdef long long[::1] ip = indptr
    cdef int[::1] ix = indices
    cdef Py_ssize_t n = ip.shape[0] - 1
    cdef int tt = t
    deg_a = np.diff(indptr).astype(np.int64)
    alive_a = np.ones(n, dtype=np.uint8)
    queue_a = np.zeros(n if n else 1, dtype=np.int32)
    cdef long long[::1] deg = deg_a
    cdef unsigned char[::1] alive = alive_a
    cdef int[::1] queue = queue_a
    cdef Py_ssize_t head = 0, tail = 0, i
    cdef int v, w
    cdef long long p
    for i in range(n):
        if deg[i] < tt:
            queue[tail] = <int>i
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        if not alive[v]:
            continue
        alive[v] = 0
        for p in range(ip[v], ip[v + 1]):
            w = ix[p]
            if alive[w]:
                deg[w] -= 1
                if deg[w] == tt - 1:
                    queue[tail] = w
                    tail += 1
    return alive_a


def peel_table(indptr, indices, dmin):
    """Keep-mask after size-dependent peeling.

    dmin[m] is the smallest acceptable degree while m vertices remain;
    each round deletes the smallest-id vertex below the current threshold
    and recomputes the threshold, so the result is order-canonical.
    """
    cdef long long[::1] ip = indptr
    cdef int[::1] ix = indices
    cdef long long[::1] dm = dmin
    cdef Py_ssize_t n = ip.shape[0] - 1
    deg_a = np.diff(indptr).astype(np.int64)
    alive_a = np.ones(n, dtype=np.uint8)
    cdef long long[::1] deg = deg_a
    cdef unsigned char[::1] alive = alive_a
    cdef Py_ssize_t m = n, i
    cdef long long th, p
    cdef int v, w
    while m > 0:
        th = dm[m]
        v = -1
        for i in range(n):
            if alive[i] and deg[i] < th:
                v = <int>i
                break
        if v < 0:
            break
        alive[v] = 0
        m -= 1
        for p in range(ip[v], ip[v + 1]):
            w = ix[p]
            if alive[w]:
                deg[w] -= 1
        deg[v] = 0
    return alive_a


cdef inline int _bit_u64(unsigned long long chi, int pos):
    return <int>((chi >> pos) & 1)


cdef (int, int, int) _chord_case_u64(int L, int r, unsigned long long chi):
    cdef unsigned long long full = ((<unsigned long long>1) << L) - 1
    cdef unsigned long long rot
    cdef int m = 0, s, alpha, x, y
    chi &= full
    for s in range(1, L):
        rot = ((chi >> s) | (chi << (L - s))) & full
        if rot == chi:
            m = s
            break
    if m == 0:
        return 0, 0, 0
    if r <= m:
        for alpha in range(m):
            # r - 1 - alpha can dip below zero; add L so C truncated
            # modulo matches Python floor modulo (operands stay < 2L).
            x = _bit_u64(chi, (L - alpha) % L)
            y = _bit_u64(chi, (r - 1 - alpha + L) % L)
            if x != y:
                return 3, m, alpha
        return 4, m, -1
    for alpha in range(m):
        x = _bit_u64(chi, (L - alpha) % L)
        if x != _bit_u64(chi, (r + 1 + alpha) % L):
            return 1, m, alpha
        if _bit_u64(chi, alpha) != _bit_u64(chi, (r - 1 - alpha + L) % L):
            return 2, m, alpha
    return 4, m, -1


def _chord_case_obj(L, r, chi):
    # arbitrary-precision path for cycles longer than 32 positions
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
    cdef int c, m, alpha
    if L <= 32:
        c, m, alpha = _chord_case_u64(L, r, chi)
        return c, m, alpha
    return _chord_case_obj(L, r, chi)


def chord_case_sweep(L, r):
    """chord_case over every nontrivial coloring; returns (case, m) arrays."""
    cdef int LL = L, rr = r
    if LL > 24:
        raise ValueError(f"sweep size 2^{LL} is too large")
    cdef Py_ssize_t size = (<Py_ssize_t>1) << LL
    case_a = np.zeros(size, dtype=np.uint8)
    m_a = np.zeros(size, dtype=np.uint8)
    cdef unsigned char[::1] case_arr = case_a
    cdef unsigned char[::1] m_arr = m_a
    cdef Py_ssize_t chi
    cdef int c, m, alpha
    for chi in range(1, size - 1):
        c, m, alpha = _chord_case_u64(LL, rr, <unsigned long long>chi)
        case_arr[chi] = <unsigned char>c
        m_arr[chi] = <unsigned char>m
    return case_a, m_a
