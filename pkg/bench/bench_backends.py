"""Benchmark: compiled kernels vs the pure-Python mirror.

Times the hot kernels on deterministic inputs and prints one table row
per kernel. Run from a checkout with the extension built:

    python3 bench/bench_backends.py
"""

from __future__ import annotations

import time

import numpy as np

from cyclespec import _pykernels as pure
from cyclespec.generators import GenSpec, generate

try:
    from cyclespec import _kernels as compiled
except ImportError:
    compiled = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _check_equal(a, b):
    if isinstance(a, tuple):
        return all(_check_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main() -> None:
    q11 = generate(GenSpec("hypercube", {"d": 11}))
    heawood_like = generate(GenSpec("projective_incidence", {"q": 13}))
    rb = generate(
        GenSpec("random_bipartite", {"n1": 3000, "n2": 3000, "p": "1/250"}, seed=5)
    )
    dmin = np.minimum(np.arange(rb.n + 1, dtype=np.int64) // 500 + 2, 12)

    jobs = [
        ("bfs_tree", f"Q11 n={q11.n}", "bfs_tree", (q11.indptr, q11.indices, 0)),
        ("ecc_all", f"Q11 n={q11.n} m={q11.m}", "ecc_all", (q11.indptr, q11.indices)),
        (
            "girth_csr",
            f"PG(2,13) n={heawood_like.n} m={heawood_like.m}",
            "girth_csr",
            (heawood_like.indptr, heawood_like.indices, True),
        ),
        ("peel_mindeg", f"G(3000,3000) m={rb.m}", "peel_mindeg", (rb.indptr, rb.indices, 8)),
        ("peel_table", f"G(3000,3000) m={rb.m}", "peel_table", (rb.indptr, rb.indices, dmin)),
        ("chord_case_sweep", "L=12, all colorings", "chord_case_sweep", (12, 5)),
    ]

    print(f"{'kernel':<17} {'input':<28} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, desc, name, args in jobs:
        t_pure, out_pure = _time(getattr(pure, name), *args)
        if compiled is None:
            print(f"{label:<17} {desc:<28} {t_pure:>9.4f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_comp, out_comp = _time(getattr(compiled, name), *args)
        if not _check_equal(out_pure, out_comp):
            raise SystemExit(f"{label}: backends disagree")
        print(
            f"{label:<17} {desc:<28} {t_pure:>9.4f}s {t_comp:>9.4f}s {t_pure / t_comp:>7.1f}x"
        )
    if compiled is None:
        print("compiled extension not importable; built it with: pip install -e .")


if __name__ == "__main__":
    main()
