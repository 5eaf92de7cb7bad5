"""Brute-force reference answers, kept deliberately dumb.

These enumerate rather than construct, so the clever code paths can be
checked against them on small inputs. Work is capped by CYCLESPEC_BUDGET
(DFS expansions) to keep runaway inputs from hanging a test run.
"""

from __future__ import annotations

import os

from .errors import BudgetExceeded, InputError
from .graph import Graph

DEFAULT_BUDGET = 50_000_000


def work_budget() -> int:
    raw = os.environ.get("CYCLESPEC_BUDGET", "")
    if not raw:
        return DEFAULT_BUDGET
    try:
        v = int(raw)
    except ValueError:
        raise InputError(f"CYCLESPEC_BUDGET must be an integer, got {raw!r}") from None
    if v <= 0:
        raise InputError(f"CYCLESPEC_BUDGET must be positive, got {v}")
    return v


def brute_cycle_spectrum(g: Graph, max_len: int) -> set[int]:
    """Exact set of cycle lengths in [3, max_len] present in g.

    Enumerates each cycle once: rooted at its smallest vertex, walking
    toward the smaller of the root's two cycle neighbors first. Stops early
    once every length in range has been seen.
    """
    if max_len < 3:
        return set()
    if g.n > 20 and max_len > 12:
        raise InputError(
            f"brute spectrum guard: n={g.n} with max_len={max_len} is too big "
            "(allowed: n <= 20, or max_len <= 12)"
        )
    max_len = min(max_len, g.n)
    budget = work_budget()
    nbr = [list(g.neighbors(v)) for v in range(g.n)]
    found: set[int] = set()
    want = set(range(3, max_len + 1))
    spent = 0
    path = []
    on_path = bytearray(g.n)

    for root in range(g.n):
        if want <= found:
            break
        path = [root]
        on_path[root] = 1
        # stack of per-vertex neighbor cursors
        iters = [iter(nbr[root])]
        while iters:
            spent += 1
            if spent > budget:
                raise BudgetExceeded(
                    f"brute spectrum exceeded {budget} expansions", spent=spent
                )
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                on_path[path.pop()] = 0
                continue
            if w == root and len(path) >= 3:
                # canonical direction: second vertex below last vertex
                if path[1] < path[-1] and len(path) <= max_len:
                    found.add(len(path))
                    if want <= found:
                        return found
                continue
            if w <= root or on_path[w] or len(path) >= max_len:
                continue
            path.append(w)
            on_path[w] = 1
            iters.append(iter(nbr[w]))
        on_path[root] = 0
    return found


def brute_cycle_witness(g: Graph, length: int) -> list[int] | None:
    """A concrete simple cycle of exactly `length` vertices, or None.

    Same exhaustive enumeration as brute_cycle_spectrum (rooted at the
    cycle's smallest vertex), but returns the first witness and stops, so
    confirming a length that is present costs far less than mapping the
    whole spectrum. Absence still requires exhausting the search space.
    """
    if length < 3 or length > g.n:
        return None
    budget = work_budget()
    nbr = [list(g.neighbors(v)) for v in range(g.n)]
    spent = 0
    on_path = bytearray(g.n)

    for root in range(g.n):
        path = [root]
        on_path[root] = 1
        iters = [iter(nbr[root])]
        while iters:
            spent += 1
            if spent > budget:
                raise BudgetExceeded(
                    f"brute witness exceeded {budget} expansions", spent=spent
                )
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                on_path[path.pop()] = 0
                continue
            if w == root and len(path) == length:
                return [int(x) for x in path]
            if w <= root or on_path[w] or len(path) >= length:
                continue
            path.append(w)
            on_path[w] = 1
            iters.append(iter(nbr[w]))
        on_path[root] = 0
    return None


def brute_ab_path_lengths(host, part) -> set[int]:
    """Lengths of simple paths in a chorded cycle running from side A to
    side B, by exhaustive enumeration. Positions, not host vertex ids."""
    from .chordpaths import path_spectrum_oracle

    return set(path_spectrum_oracle(host, part))
