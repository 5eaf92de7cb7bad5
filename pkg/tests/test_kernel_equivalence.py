"""Compiled kernels and the pure-Python mirror must agree bit-for-bit."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import gen, petersen, random_graph
from cyclespec import _pykernels as pure
from cyclespec.backend import backend_name

compiled = pytest.importorskip(
    "cyclespec._kernels", reason="compiled backend not built"
)


GRAPHS = [
    gen("cycle", n=9),
    gen("complete", n=7),
    gen("complete_bipartite", a=5, b=8),
    gen("hypercube", d=6),
    petersen(),
    gen("projective_incidence", q=3),
    gen("random_bipartite", n1=25, n2=25, p="1/3", seed=4),
]


def test_backend_reports_compiled():
    assert backend_name() == "compiled"


@pytest.mark.parametrize("gi", range(len(GRAPHS)))
def test_bfs_tree_matches(gi):
    g = GRAPHS[gi]
    for root in range(0, g.n, max(1, g.n // 3)):
        dc, pc = compiled.bfs_tree(g.indptr, g.indices, root)
        dp, pp = pure.bfs_tree(g.indptr, g.indices, root)
        assert np.array_equal(np.asarray(dc), np.asarray(dp))
        assert np.array_equal(np.asarray(pc), np.asarray(pp))


@pytest.mark.parametrize("gi", range(len(GRAPHS)))
def test_ecc_all_matches(gi):
    g = GRAPHS[gi]
    assert np.array_equal(
        np.asarray(compiled.ecc_all(g.indptr, g.indices)),
        np.asarray(pure.ecc_all(g.indptr, g.indices)),
    )


def _same_girth_answer(a, b):
    ga, wa = a
    gb, wb = b
    assert ga == gb
    assert np.array_equal(np.asarray(wa), np.asarray(wb))


@pytest.mark.parametrize("gi", range(len(GRAPHS)))
@pytest.mark.parametrize("want_witness", [False, True])
def test_girth_matches(gi, want_witness):
    g = GRAPHS[gi]
    _same_girth_answer(
        compiled.girth_csr(g.indptr, g.indices, want_witness),
        pure.girth_csr(g.indptr, g.indices, want_witness),
    )


@pytest.mark.parametrize("gi", range(len(GRAPHS)))
@pytest.mark.parametrize("t", [2, 3, 5])
def test_peel_mindeg_matches(gi, t):
    g = GRAPHS[gi]
    assert np.array_equal(
        np.asarray(compiled.peel_mindeg(g.indptr, g.indices, t)),
        np.asarray(pure.peel_mindeg(g.indptr, g.indices, t)),
    )


@pytest.mark.parametrize("gi", range(len(GRAPHS)))
def test_peel_table_matches(gi):
    g = GRAPHS[gi]
    dmin = np.minimum(np.arange(g.n + 1, dtype=np.int64) // 3 + 1, 6)
    assert np.array_equal(
        np.asarray(compiled.peel_table(g.indptr, g.indices, dmin)),
        np.asarray(pure.peel_table(g.indptr, g.indices, dmin)),
    )


def random_graph_case(n, seed):
    from fractions import Fraction

    return random_graph(n, Fraction(1, 3), seed)


@given(st.integers(2, 28), st.integers(0, 10_000))
def test_random_graph_bfs_and_girth(n, seed):
    g = random_graph_case(n, seed)
    dc, pc = compiled.bfs_tree(g.indptr, g.indices, 0)
    dp, pp = pure.bfs_tree(g.indptr, g.indices, 0)
    assert np.array_equal(np.asarray(dc), np.asarray(dp))
    assert np.array_equal(np.asarray(pc), np.asarray(pp))
    _same_girth_answer(
        compiled.girth_csr(g.indptr, g.indices, True),
        pure.girth_csr(g.indptr, g.indices, True),
    )
    assert np.array_equal(
        np.asarray(compiled.ecc_all(g.indptr, g.indices)),
        np.asarray(pure.ecc_all(g.indptr, g.indices)),
    )


@given(st.integers(4, 31), st.data())
def test_chord_case_matches_small(L, data):
    r = data.draw(st.integers(2, L // 2))
    chi = data.draw(st.integers(1, (1 << L) - 2))
    assert compiled.chord_case(L, r, chi) == pure.chord_case(L, r, chi)


@given(st.integers(33, 96), st.data())
def test_chord_case_matches_big_integers(L, data):
    r = data.draw(st.integers(2, L // 2))
    chi = data.draw(st.integers(1, (1 << L) - 2))
    assert compiled.chord_case(L, r, chi) == pure.chord_case(L, r, chi)


@pytest.mark.parametrize("L", [4, 6, 9, 12])
def test_chord_case_sweep_matches(L):
    for r in range(2, L // 2 + 1):
        cc, cm = compiled.chord_case_sweep(L, r)
        pc, pm = pure.chord_case_sweep(L, r)
        assert np.array_equal(np.asarray(cc), np.asarray(pc))
        assert np.array_equal(np.asarray(cm), np.asarray(pm))


def test_chord_case_sweep_size_guard():
    with pytest.raises(ValueError):
        compiled.chord_case_sweep(25, 2)
    with pytest.raises(ValueError):
        pure.chord_case_sweep(25, 2)


def test_pure_env_forces_fallback():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c",
         "from cyclespec.backend import backend_name; print(backend_name())"],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "CYCLESPEC_PURE": "1"},
    )
    assert out.stdout.strip() == "pure"


@pytest.mark.parametrize(
    "length,r,mask,expected",
    [
        (10, 2, 891, (3, 5, 3)),
        (10, 2, 759, (3, 5, 2)),
        (10, 2, 495, (3, 5, 1)),
        (10, 2, 990, (3, 5, 0)),
        (10, 2, 957, (3, 5, 0)),
        (10, 8, 759, (1, 5, 2)),
        (10, 8, 495, (1, 5, 0)),
    ],
)
def test_case_scan_wraparound_pins(length, r, mask, expected):
    # least-period-5 colorings where the scan offset passes the chord span;
    # C truncated modulo once sent the compiled lookup index negative here
    assert pure.chord_case(length, r, mask) == expected
    assert compiled.chord_case(length, r, mask) == expected


def test_case_scan_full_sweep_length_ten():
    for mask in range(1, (1 << 10) - 1):
        for r in range(2, 9):
            assert compiled.chord_case(10, r, mask) == pure.chord_case(10, r, mask)
