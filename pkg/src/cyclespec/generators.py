"""Deterministic generators for the graph families used in tests and demos.

Every model is a pure function of its parameters and the seed: the random
models consume a counter-based stream, so the same GenSpec always yields the
same edge set on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InputError
from .graph import Graph
from .rng import Stream

_MODELS = {}


def _model(name):
    def reg(fn):
        _MODELS[name] = fn
        return fn

    return reg


@dataclass(frozen=True)
class GenSpec:
    """A generator request: model name, integer/float params, seed."""

    model: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def to_dict(self) -> dict:
        return {"model": self.model, "params": dict(self.params), "seed": self.seed}

    def describe(self) -> str:
        parts = [self.model]
        parts += [f"{k}={self.params[k]}" for k in sorted(self.params)]
        parts.append(f"seed={self.seed}")
        return " ".join(parts)


def generate(spec: GenSpec) -> Graph:
    """Build the graph a GenSpec describes; the recipe lands in Graph.meta."""
    fn = _MODELS.get(spec.model)
    if fn is None:
        known = ", ".join(sorted(_MODELS))
        raise InputError(f"unknown model {spec.model!r}; known models: {known}")
    try:
        g = fn(seed=spec.seed, **spec.params)
    except TypeError as exc:
        raise InputError(f"bad parameters for model {spec.model!r}: {exc}") from None
    g.meta["genspec"] = spec.to_dict()
    return g


def _as_int(name, v, lo=None):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{name} must be an integer, got {v!r}")
    if lo is not None and v < lo:
        raise InputError(f"{name} must be >= {lo}, got {v}")
    return v


def _as_prob(name, v) -> Fraction:
    """Probability as an exact Fraction; accepts Fraction, int, float, or
    a rational string like "3/4"."""
    try:
        p = Fraction(v)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"{name} must be a probability, got {v!r}") from None
    if not 0 <= p <= 1:
        raise InputError(f"{name} must be in [0, 1], got {v}")
    return p


@_model("hypercube")
def hypercube(d: int, seed: int = 0) -> Graph:
    """d-dimensional hypercube: 2^d vertices, bit-flip adjacency."""
    d = _as_int("d", d, 1)
    if d > 24:
        raise InputError(f"hypercube dimension {d} is too large")
    n = 1 << d
    edges = [(u, u | (1 << b)) for u in range(n) for b in range(d) if not u & (1 << b)]
    return Graph(n, edges)


@_model("complete_bipartite")
def complete_bipartite(a: int, b: int, seed: int = 0) -> Graph:
    a = _as_int("a", a, 1)
    b = _as_int("b", b, 1)
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, edges)


@_model("complete")
def complete(n: int, seed: int = 0) -> Graph:
    n = _as_int("n", n, 1)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, edges)


@_model("cycle")
def cycle(n: int, seed: int = 0) -> Graph:
    n = _as_int("n", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@_model("random_bipartite")
def random_bipartite(n1: int, n2: int, p, seed: int = 0) -> Graph:
    """G(n1, n2, p): one Bernoulli draw per pair, lexicographic pair order.

    Left side is 0..n1-1, right side n1..n1+n2-1. Pair (i, j) consumes draw
    number i*n2 + j, so the edge set is a pure function of (n1, n2, p, seed).
    p may be a float or an exact rational (Fraction or a string like "3/4").
    """
    n1 = _as_int("n1", n1, 1)
    n2 = _as_int("n2", n2, 1)
    p = _as_prob("p", p)
    hits = Stream(seed).bernoulli_block(n1 * n2, p)
    idx = np.flatnonzero(hits)
    li = idx // n2
    ri = idx % n2 + n1
    edges = np.stack([li, ri], axis=1)
    return Graph(n1 + n2, edges)


@_model("regular_bipartite")
def regular_bipartite(n: int, d: int, seed: int = 0) -> Graph:
    """d-regular bipartite graph on n+n vertices: union of d random perfect
    matchings, resampling any matching that collides with earlier ones."""
    n = _as_int("n", n, 1)
    d = _as_int("d", d, 1)
    if d > n:
        raise InputError(f"regular_bipartite needs d <= n, got d={d} n={n}")
    stream = Stream(seed)
    taken = set()
    edges = []
    for t in range(d):
        for attempt in range(200):
            perm = list(range(n))
            stream.shuffle(perm)
            pairs = [(i, n + perm[i]) for i in range(n)]
            if not any(pr in taken for pr in pairs):
                taken.update(pairs)
                edges += pairs
                break
        else:
            raise InputError(
                f"regular_bipartite(n={n}, d={d}, seed={seed}): matching {t} "
                "kept colliding; raise n or change the seed"
            )
    return Graph(2 * n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


@_model("projective_incidence")
def projective_incidence(q: int, seed: int = 0) -> Graph:
    """Point-line incidence graph of the projective plane of prime order q:
    2(q^2+q+1) vertices, (q+1)-regular, girth 6. Points come first, in
    lexicographic order of their normalized coordinate triples."""
    q = _as_int("q", q, 2)
    if q > 97 or not _is_prime(q):
        raise InputError(f"q must be a prime <= 97, got {q}")
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    pts.sort()
    npts = len(pts)
    edges = []
    for li, (a, b, c) in enumerate(pts):
        for pi, (x, y, z) in enumerate(pts):
            if (a * x + b * y + c * z) % q == 0:
                edges.append((pi, npts + li))
    return Graph(2 * npts, edges)


def model_names() -> list[str]:
    return sorted(_MODELS)
