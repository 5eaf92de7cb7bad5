"""Graph type, text formats, and exact degree arithmetic.

Vertices are dense ids 0..n-1. The structure is immutable CSR with
neighbor lists sorted ascending, plus a sorted edge list (u < v) used by
the vectorized layer counting and the serializer. Two text formats are
supported: a plain edge list with '#' comments (the serializer's output,
whose '# n=<n> m=<m>' header preserves trailing isolated vertices on
round-trip) and DIMACS ('c' comments, 'p <tag> n m', 1-based 'e u v'
lines shifted down to 0-based ids).
"""

from __future__ import annotations

import hashlib
import re
from fractions import Fraction

import numpy as np

from .errors import InputError, ParseError

_HEADER_RE = re.compile(r"#\s*n=(\d+)\s+m=(\d+)\s*$")


class Graph:
    """Immutable undirected simple graph in CSR form."""

    __slots__ = ("n", "m", "indptr", "indices", "edge_u", "edge_v", "meta")

    def __init__(self, n: int, edges, meta: dict | None = None):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InputError("edges must be pairs")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise InputError("edge endpoint out of range")
        u = np.minimum(arr[:, 0], arr[:, 1])
        v = np.maximum(arr[:, 0], arr[:, 1])
        if np.any(u == v):
            raise InputError("self-loops are not allowed")
        packed = np.unique(u * np.int64(max(n, 1)) + v)
        u = (packed // max(n, 1)).astype(np.int64)
        v = (packed % max(n, 1)).astype(np.int64)
        self.n = n
        self.m = int(u.size)
        self.edge_u = u
        self.edge_v = v
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        order = np.lexsort((dst, src))
        counts = np.bincount(src, minlength=n)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=self.indptr[1:])
        self.indices = dst[order].astype(np.int32)
        self.meta = meta or {}

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = int(np.searchsorted(nb, v))
        return i < nb.size and nb[i] == v

    def subgraph(self, vertices) -> tuple["Graph", np.ndarray]:
        """Induced subgraph; returns (H, orig_ids) with orig_ids[new] = old."""
        orig = np.unique(np.asarray(vertices, dtype=np.int64))
        if orig.size and (orig[0] < 0 or orig[-1] >= self.n):
            raise InputError("subgraph vertex out of range")
        inset = np.zeros(self.n, dtype=bool)
        inset[orig] = True
        keep = inset[self.edge_u] & inset[self.edge_v]
        remap = np.zeros(self.n, dtype=np.int64)
        remap[orig] = np.arange(orig.size)
        edges = np.stack([remap[self.edge_u[keep]], remap[self.edge_v[keep]]], axis=1)
        return Graph(int(orig.size), edges), orig

    def components(self) -> list[np.ndarray]:
        """Vertex arrays of connected components, ordered by smallest member."""
        label = np.full(self.n, -1, dtype=np.int64)
        nxt = 0
        for root in range(self.n):
            if label[root] >= 0:
                continue
            stack = [root]
            label[root] = nxt
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if label[w] < 0:
                        label[w] = nxt
                        stack.append(int(w))
            nxt += 1
        return [np.flatnonzero(label == c) for c in range(nxt)]

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.edge_u, other.edge_u)
            and np.array_equal(self.edge_v, other.edge_v)
        )

    def __hash__(self):
        return hash((self.n, self.m))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def average_degree(g: Graph) -> Fraction:
    """Exact average degree 2m/n."""
    if g.n == 0:
        raise InputError("average degree of the empty graph is undefined")
    return Fraction(2 * g.m, g.n)


def parse_graph(text: str) -> Graph:
    """Parse edge-list or DIMACS text into a Graph.

    Duplicate edges collapse; self-loops are an error. The detected format
    and any declared sizes land in Graph.meta.
    """
    lines = text.splitlines()
    is_dimacs = any(ln.lstrip().startswith("p ") for ln in lines)
    if is_dimacs:
        return _parse_dimacs(lines)
    return _parse_edgelist(lines)


def _parse_edgelist(lines) -> Graph:
    declared_n = None
    declared_m = None
    edges = []
    max_id = -1
    for i, raw in enumerate(lines, 1):
        ln = raw.strip()
        if not ln:
            continue
        if ln.startswith("#"):
            mh = _HEADER_RE.match(ln)
            if mh and declared_n is None:
                declared_n = int(mh.group(1))
                declared_m = int(mh.group(2))
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {i}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {i}: non-integer vertex id in {ln!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {i}: negative vertex id")
        if u == v:
            raise ParseError(f"line {i}: self-loop at vertex {u}")
        max_id = max(max_id, u, v)
        edges.append((u, v))
    n = max_id + 1
    meta = {"format": "edgelist", "declared_n": declared_n, "declared_m": declared_m}
    if declared_n is not None:
        if declared_n < n:
            raise ParseError(f"header declares n={declared_n} but ids reach {max_id}")
        n = declared_n
    elif edges:
        # Headerless input: gaps in the id space are compacted away and the
        # original ids kept in meta["id_map"] (new id -> original id).
        used = sorted({x for e in edges for x in e})
        if len(used) != n:
            pos = {orig: new for new, orig in enumerate(used)}
            edges = [(pos[u], pos[v]) for u, v in edges]
            n = len(used)
            meta["id_map"] = used
    return Graph(n, edges, meta=meta)


def _parse_dimacs(lines) -> Graph:
    n = None
    declared_m = None
    edges = []
    for i, raw in enumerate(lines, 1):
        ln = raw.strip()
        if not ln or ln.startswith("c"):
            continue
        parts = ln.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(f"line {i}: repeated problem line")
            if len(parts) != 4:
                raise ParseError(f"line {i}: malformed problem line {ln!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {i}: malformed problem line {ln!r}") from None
            continue
        if parts[0] == "e":
            if n is None:
                raise ParseError(f"line {i}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {i}: expected 'e u v', got {ln!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {i}: non-integer vertex id in {ln!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {i}: vertex id outside 1..{n}")
            if u == v:
                raise ParseError(f"line {i}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(f"line {i}: unrecognized line {ln!r}")
    if n is None:
        raise ParseError("missing problem line")
    meta = {"format": "dimacs", "declared_n": n, "declared_m": declared_m}
    return Graph(n, edges, meta=meta)


def serialize(g: Graph) -> str:
    """Canonical edge-list text; parse(serialize(g)) == g."""
    out = [f"# n={g.n} m={g.m}"]
    for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"


def graph_sha256(g: Graph) -> str:
    """Hash of the canonical serialization; identifies the graph, not the file."""
    return hashlib.sha256(serialize(g).encode("utf-8")).hexdigest()
