"""Path spectra of two-colored chorded cycles: construction vs. brute force."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclespec.chordpaths import (
    PartitionAB,
    PathCertificate,
    path_spectrum_constructive,
    path_spectrum_oracle,
    smallest_missing_m,
    verify_certificate,
)
from cyclespec.errors import BudgetExceeded, InputError, InternalContradiction
from cyclespec.extract import ChordedCycle


def _host(length, chord):
    return ChordedCycle(
        cycle=tuple(range(length)), chord=chord, girth_used=0, core_size=length
    )


def _alternating(length):
    return PartitionAB.from_a(length, range(0, length, 2))


# ------------------------------------------------------------ host validation


def test_host_too_short():
    with pytest.raises(InputError):
        smallest_missing_m(_host(3, (0, 2)), PartitionAB.from_a(3, [0]))


def test_chord_must_be_nonadjacent():
    for chord in ((0, 1), (0, 5), (2, 2)):
        with pytest.raises(InputError):
            smallest_missing_m(_host(6, chord), _alternating(6))


def test_partition_size_must_match():
    with pytest.raises(InputError):
        smallest_missing_m(_host(6, (0, 2)), _alternating(8))


# ------------------------------------------------------------ periodicity scan


def test_smallest_missing_m_examples():
    host = _host(6, (0, 2))
    # alternating coloring has period 2
    assert smallest_missing_m(host, _alternating(6)) == 2
    # one A-arc of three: no rotation fixes it
    assert smallest_missing_m(host, PartitionAB.from_a(6, [0, 1, 2])) is None
    # A at 0 and 3: period 3
    assert smallest_missing_m(host, PartitionAB.from_a(6, [0, 3])) == 3


def test_missing_lengths_are_exactly_the_periods():
    host = _host(8, (0, 3))
    part = PartitionAB.from_a(8, [0, 4])  # period 4
    assert smallest_missing_m(host, part) == 4
    oracle = set(path_spectrum_oracle(host, part))
    chordless = set()
    chi = part.chi
    for ell in range(1, 8):
        if any(chi[j] != chi[(j + ell) % 8] for j in range(8)):
            chordless.add(ell)
    assert 4 not in chordless and chordless <= oracle


# ------------------------------------------------------------ constructive: pinned


def test_aperiodic_coloring_needs_no_chord():
    host = _host(6, (0, 2))
    result, trace = path_spectrum_constructive(host, PartitionAB.from_a(6, [0, 1, 2]))
    assert not result.is_exception
    assert result.lengths() == {1, 2, 3, 4, 5}
    assert trace.case == "chordless"
    assert trace.m is None and trace.extension_count == 0


def test_periodic_coloring_uses_the_chord():
    host = _host(6, (0, 3))
    result, trace = path_spectrum_constructive(host, PartitionAB.from_a(6, [0, 3]))
    assert not result.is_exception
    assert result.lengths() == {1, 2, 3, 4, 5}
    assert trace.m == 3 and trace.d == 3
    assert trace.extension_count == 1
    p, q = trace.bezout
    assert p * 3 + q * 6 == 3


def test_alternating_crossing_chord_is_the_exception():
    host = _host(6, (0, 3))
    result, trace = path_spectrum_constructive(host, _alternating(6))
    assert result.is_exception
    exc = result.exception
    assert exc.side_a == (0, 2, 4) and exc.side_b == (1, 3, 5)
    assert exc.crossing_chord == (0, 3)
    assert set(exc.odd_paths) == {1, 3, 5}
    assert trace.case == "exception" and trace.m == 2


def test_alternating_noncrossing_chord_is_full():
    host = _host(6, (0, 2))
    result, _ = path_spectrum_constructive(host, _alternating(6))
    assert not result.is_exception
    assert result.lengths() == {1, 2, 3, 4, 5}


def test_paths_run_a_to_b():
    host = _host(10, (0, 4))
    part = PartitionAB.from_a(10, [0, 5])
    result, _ = path_spectrum_constructive(host, part)
    for ell, cert in result.paths().items():
        assert cert.length == ell
        assert part.chi[cert.vertices[0]] == 1
        assert part.chi[cert.vertices[-1]] == 0


# ------------------------------------------------------------ certificate checks


def test_verify_certificate_rejects_bad_paths():
    host = _host(6, (0, 2))
    part = _alternating(6)
    with pytest.raises(InternalContradiction, match="no edge"):
        verify_certificate(host, part, PathCertificate((0,)))
    with pytest.raises(InternalContradiction, match="repeat"):
        verify_certificate(host, part, PathCertificate((0, 1, 0)))
    with pytest.raises(InternalContradiction, match="not adjacent"):
        verify_certificate(host, part, PathCertificate((0, 3)))
    with pytest.raises(InternalContradiction, match="out of range"):
        verify_certificate(host, part, PathCertificate((0, 7)))
    with pytest.raises(InternalContradiction, match="A-to-B"):
        verify_certificate(host, part, PathCertificate((1, 0)))
    # chord edge is legal
    verify_certificate(host, part, PathCertificate((0, 2, 1)))


# ------------------------------------------------------------ oracle budget


def test_oracle_budget_env(monkeypatch):
    monkeypatch.setenv("CYCLESPEC_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        path_spectrum_oracle(_host(12, (0, 5)), _alternating(12))


# ------------------------------------------------------------ exhaustive: small L


def _exception_expected(length, chord, a_positions):
    alt_even = set(range(0, length, 2))
    if length % 2:
        return False
    a = set(a_positions)
    if a != alt_even and a != set(range(1, length, 2)):
        return False
    return (chord[1] - chord[0]) % 2 == 1


def test_exception_happens_exactly_for_alternating_crossing():
    for length in range(4, 9):
        for i in range(length):
            for j in range(i + 2, length):
                if (j - i) % length in (0, 1, length - 1):
                    continue
                host = _host(length, (i, j))
                for mask in range(1, (1 << length) - 1):
                    a = [x for x in range(length) if mask >> x & 1]
                    part = PartitionAB.from_a(length, a)
                    result, trace = path_spectrum_constructive(host, part)
                    expect = _exception_expected(length, (i, j), a)
                    assert result.is_exception == expect, (length, i, j, a)
                    if expect:
                        assert set(result.lengths()) == set(range(1, length, 2))
                    else:
                        assert result.lengths() == set(range(1, length))


# ------------------------------------------------------------ property: vs oracle


@st.composite
def chorded_case(draw):
    length = draw(st.integers(4, 12))
    i = draw(st.integers(0, length - 1))
    gap = draw(st.integers(2, length - 2))
    j = (i + gap) % length
    i, j = min(i, j), max(i, j)
    mask = draw(st.integers(1, (1 << length) - 2))
    a = [x for x in range(length) if mask >> x & 1]
    return length, (i, j), a


@given(chorded_case())
def test_constructive_matches_oracle(case):
    length, chord, a = case
    host = _host(length, chord)
    part = PartitionAB.from_a(length, a)
    result, trace = path_spectrum_constructive(host, part)
    oracle = set(path_spectrum_oracle(host, part))
    assert result.lengths() == oracle
    if result.is_exception:
        assert oracle == set(range(1, length, 2))
    else:
        assert oracle == set(range(1, length))
    if trace.m is not None:
        assert trace.m >= 2 and length % trace.m == 0
        assert trace.d == math.gcd(trace.m, length) == trace.m
        p, q = trace.bezout
        assert p * trace.m + q * length == trace.m
        if trace.case != "exception":
            assert trace.extension_count == length // trace.m - 1


# Colorings with least period 5 on a 10-cycle whose chord sits inside one
# period: the near-chord scan offset can exceed the chord span, wrapping the
# lookup index below zero. These once produced paths rejected by the
# verifier; pin them to keep both backends on floor-modulo wraparound.
PERIOD5_NEAR_CHORD_CASES = [
    (10, (0, 2), 891),
    (10, (0, 8), 759),
    (10, (1, 3), 759),
    (10, (1, 9), 495),
    (10, (2, 4), 495),
    (10, (3, 5), 990),
    (10, (4, 6), 957),
    (10, (5, 7), 891),
    (10, (6, 8), 759),
    (10, (7, 9), 495),
]


@pytest.mark.parametrize("length,chord,mask", PERIOD5_NEAR_CHORD_CASES)
def test_near_chord_wraparound_regression(length, chord, mask):
    host = _host(length, chord)
    side_a = [x for x in range(length) if not (mask >> x) & 1]
    part = PartitionAB.from_a(length, side_a)
    result, trace = path_spectrum_constructive(host, part)
    for cert in result.paths().values():
        verify_certificate(host, part, cert)
    assert trace.case == "chord-within-m"
    assert trace.m == 5
    assert result.lengths() == set(range(1, length))
    assert result.lengths() == set(path_spectrum_oracle(host, part))
