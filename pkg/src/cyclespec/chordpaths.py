"""Path spectra of two-colored chorded cycles.

The engine behind every spectrum driver: a cycle on positions 0..L-1 with
one chord, each position colored A or B, yields an A-B path of every length
1..L-1 -- except when the coloring alternates and the chord crosses the
classes, in which case exactly the odd lengths survive (and that failure is
certified). Everything here speaks positions; hosts map ids elsewhere.

Construction outline: colorings with no period below L need no chord (walk
around the cycle). Otherwise the least period m divides L, non-multiples of
m are again chordless, and each multiple km is realized by a path through
the chord built from two arms whose combined length is km-1. The arm shapes
come in three flavors (both-descending, both-ascending, both-on-the-long-
arc); a short scan of arm residues picks one that makes the endpoint colors
differ, and the only unsatisfiable scan is the alternating/odd-chord case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .backend import kernels
from .errors import BudgetExceeded, InputError, InternalContradiction
from .oracle import work_budget

_CASE_NAMES = {
    0: "chordless",
    1: "far-chord",
    2: "far-chord",
    3: "chord-within-m",
    4: "exception",
}


@dataclass(frozen=True)
class PartitionAB:
    """Two-coloring of cycle positions; chi[x] is 1 on side A, 0 on side B."""

    chi: tuple

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.chi):
            raise InputError("partition labels must be 0 (B) or 1 (A)")
        if len(set(self.chi)) != 2:
            raise InputError("partition must have both sides nonempty")

    @classmethod
    def from_a(cls, length: int, a_positions) -> "PartitionAB":
        a = set(int(x) for x in a_positions)
        if not a <= set(range(length)):
            raise InputError("A-positions out of range")
        return cls(tuple(1 if x in a else 0 for x in range(length)))

    @property
    def size(self) -> int:
        return len(self.chi)

    def side_a(self) -> tuple:
        return tuple(i for i, c in enumerate(self.chi) if c == 1)

    def side_b(self) -> tuple:
        return tuple(i for i, c in enumerate(self.chi) if c == 0)

    def mask(self) -> int:
        bits = 0
        for i, c in enumerate(self.chi):
            bits |= c << i
        return bits


@dataclass(frozen=True)
class PathCertificate:
    """A simple path over cycle positions, first endpoint in A, last in B."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple:
        return (self.vertices[0], self.vertices[-1])


@dataclass(frozen=True)
class ExceptionCertificate:
    """Witness that only odd lengths exist: the coloring alternates around
    the cycle and the chord joins the two classes."""

    side_a: tuple
    side_b: tuple
    crossing_chord: tuple
    odd_paths: dict


@dataclass(frozen=True)
class SpectrumResult:
    """Either a path for every length 1..L-1, or the odd-only exception."""

    full: dict | None
    exception: ExceptionCertificate | None

    @property
    def is_exception(self) -> bool:
        return self.exception is not None

    def paths(self) -> dict:
        return self.full if self.full is not None else self.exception.odd_paths

    def lengths(self) -> set:
        return set(self.paths())


@dataclass(frozen=True)
class ChordPathTrace:
    """Which construction branch ran, and the periodicity data behind it."""

    m: int | None
    d: int | None
    bezout: tuple | None
    case: str
    extension_count: int


def _check_host(host) -> tuple:
    length = len(host.cycle)
    i, j = int(host.chord[0]), int(host.chord[1])
    if length < 4:
        raise InputError(f"chorded cycle needs length >= 4, got {length}")
    if not (0 <= i < length and 0 <= j < length):
        raise InputError(f"chord {host.chord} out of range")
    if (j - i) % length in (0, 1, length - 1):
        raise InputError(f"chord {host.chord} joins adjacent positions")
    return length, i, j


def _check_part(length: int, part: PartitionAB) -> None:
    if part.size != length:
        raise InputError(
            f"partition covers {part.size} positions, cycle has {length}"
        )


def smallest_missing_m(host, part: PartitionAB):
    """Smallest length with no chordless A-B path, or None.

    Length l is chordless-realizable iff chi(j) != chi(j+l) for some j,
    so the missing lengths are exactly the rotation periods of chi.
    """
    length, _, _ = _check_host(host)
    _check_part(length, part)
    chi = part.chi
    for ell in range(1, length):
        if all(chi[j] == chi[(j + ell) % length] for j in range(length)):
            return ell
    return None


def _normalize_chord(length: int, i: int, j: int) -> tuple:
    """Rotate (and possibly reflect) positions so the chord is (0, r) with
    2 <= r <= length/2. Returns (anchor, sign, r); original position of a
    normalized x is (anchor + sign*x) mod length."""
    d1 = (j - i) % length
    d2 = (i - j) % length
    if d1 <= d2:
        return i, 1, d1
    return i, -1, d2


def _chordless_path(length: int, chi, ell: int) -> tuple:
    for j in range(length):
        if chi[j] != chi[(j + ell) % length]:
            verts = tuple((j + t) % length for t in range(ell + 1))
            return verts if chi[j] == 1 else verts[::-1]
    raise InternalContradiction(f"no chordless path of length {ell}")


def _arm_path(length, r, down0, downr, a, b):
    """Chord path from two arms: a steps off position 0, b steps off
    position r, each arm running up or down the cycle."""
    if down0:
        first = [(t - a) % length for t in range(a + 1)]
    else:
        first = [(a - t) % length for t in range(a + 1)]
    if downr:
        second = [(r - t) % length for t in range(b + 1)]
    else:
        second = [(r + t) % length for t in range(b + 1)]
    return tuple(first + second)


def _pick_residue(lower: int, upper: int, alpha: int, m: int) -> int:
    a = lower + (alpha - lower) % m
    if a > upper:
        raise InternalContradiction(
            f"empty arm window [{lower}, {upper}] for residue {alpha} mod {m}"
        )
    return a


def _chord_path(length, r, m, case, alpha, mult) -> tuple:
    """Positions of the chord-using path of length mult*m, normalized frame."""
    km = mult * m
    if case == 3:
        a = alpha
        b = km - 1 - a
        return _arm_path(length, r, True, False, a, b)
    if case == 1:
        a = _pick_residue(max(0, km - r), min(km - 1, length - r - 1), alpha, m)
        return _arm_path(length, r, True, True, a, km - 1 - a)
    if case == 2:
        a = _pick_residue(max(0, km - length + r), min(km - 1, r - 1), alpha, m)
        return _arm_path(length, r, False, False, a, km - 1 - a)
    raise InternalContradiction(f"no chord construction for case {case}")


def verify_certificate(host, part: PartitionAB, cert: PathCertificate) -> None:
    """Assert cert is a simple A-to-B path in the chorded cycle."""
    length, ci, cj = _check_host(host)
    verts = cert.vertices
    if len(verts) < 2:
        raise InternalContradiction("path certificate with no edge")
    if len(set(verts)) != len(verts):
        raise InternalContradiction("path certificate repeats a position")
    if any(not 0 <= v < length for v in verts):
        raise InternalContradiction("path certificate position out of range")
    chord = {ci, cj}
    for x, y in zip(verts, verts[1:]):
        if (y - x) % length in (1, length - 1):
            continue
        if {x, y} == chord:
            continue
        raise InternalContradiction(f"positions {x},{y} are not adjacent")
    if part.chi[verts[0]] != 1 or part.chi[verts[-1]] != 0:
        raise InternalContradiction("path endpoints are not A-to-B")


def path_spectrum_constructive(host, part: PartitionAB):
    """A-B paths of every length 1..L-1, or the certified odd-only
    exception; plus a trace of the construction branch."""
    length, ci, cj = _check_host(host)
    _check_part(length, part)
    chi = part.chi
    anchor, sign, r = _normalize_chord(length, ci, cj)
    norm_mask = 0
    for x in range(length):
        norm_mask |= chi[(anchor + sign * x) % length] << x
    case, m, alpha = kernels.chord_case(length, r, norm_mask)
    case_name = _CASE_NAMES[case]

    def denorm(path):
        verts = tuple((anchor + sign * x) % length for x in path)
        cert = PathCertificate(verts if chi[verts[0]] == 1 else verts[::-1])
        verify_certificate(host, part, cert)
        return cert

    if case == 4:
        if r <= m:
            raise InternalContradiction(
                f"near-chord residue scan failed (L={length}, r={r}, m={m})"
            )
        if m != 2 or r % 2 == 0 or chi[ci] == chi[cj]:
            raise InternalContradiction(
                f"non-alternating coloring fell through every construction "
                f"(L={length}, r={r}, m={m})"
            )
        odd = {}
        for ell in range(1, length, 2):
            cert = PathCertificate(_chordless_path(length, chi, ell))
            verify_certificate(host, part, cert)
            odd[ell] = cert
        result = SpectrumResult(
            full=None,
            exception=ExceptionCertificate(
                side_a=part.side_a(),
                side_b=part.side_b(),
                crossing_chord=(ci, cj),
                odd_paths=odd,
            ),
        )
        trace = ChordPathTrace(
            m=2, d=2, bezout=_bezout(2, length), case=case_name, extension_count=0
        )
        return result, trace

    full = {}
    if case == 0:
        for ell in range(1, length):
            cert = PathCertificate(_chordless_path(length, chi, ell))
            verify_certificate(host, part, cert)
            full[ell] = cert
        trace = ChordPathTrace(
            m=None, d=None, bezout=None, case=case_name, extension_count=0
        )
        return SpectrumResult(full=full, exception=None), trace

    if m < 2 or length % m:
        raise InternalContradiction(
            f"least period m={m} does not divide the cycle length {length}"
        )
    for ell in range(1, length):
        if ell % m:
            cert = PathCertificate(_chordless_path(length, chi, ell))
        else:
            cert = denorm(_chord_path(length, r, m, case, alpha, ell // m))
        verify_certificate(host, part, cert)
        full[ell] = cert
    trace = ChordPathTrace(
        m=m,
        d=math.gcd(length, m),
        bezout=_bezout(m, length),
        case=case_name,
        extension_count=length // m - 1,
    )
    if trace.d != m:
        raise InternalContradiction(f"hcf({length}, {m}) = {trace.d} != m")
    return SpectrumResult(full=full, exception=None), trace


def _bezout(m: int, n: int) -> tuple:
    """(p, q) with p*m + q*n = gcd(m, n), from the extended Euclid run."""
    old_r, rr = m, n
    old_p, pp = 1, 0
    old_q, qq = 0, 1
    while rr:
        quo = old_r // rr
        old_r, rr = rr, old_r - quo * rr
        old_p, pp = pp, old_p - quo * pp
        old_q, qq = qq, old_q - quo * qq
    return (old_p, old_q)


def path_spectrum_oracle(host, part: PartitionAB) -> dict:
    """Every realizable A-B path length by exhaustive enumeration, with the
    first witness met in scan order. Exact and theory-free; L <= 60."""
    length, ci, cj = _check_host(host)
    _check_part(length, part)
    if length > 60:
        raise InputError(f"oracle size guard: L={length} > 60")
    chi = part.chi
    adj = [[(x - 1) % length, (x + 1) % length] for x in range(length)]
    adj[ci].append(cj)
    adj[cj].append(ci)
    for row in adj:
        row.sort()
    budget = work_budget()
    spent = 0
    witness = {}
    on_path = bytearray(length)
    for start in range(length):
        if chi[start] != 1:
            continue
        path = [start]
        on_path[start] = 1
        iters = [iter(adj[start])]
        while iters:
            spent += 1
            if spent > budget:
                raise BudgetExceeded(
                    f"path oracle exceeded {budget} expansions", spent=spent
                )
            w = next(iters[-1], None)
            if w is None:
                iters.pop()
                on_path[path.pop()] = 0
                continue
            if on_path[w]:
                continue
            path.append(w)
            on_path[w] = 1
            iters.append(iter(adj[w]))
            ell = len(path) - 1
            if chi[w] == 0 and ell not in witness:
                cert = PathCertificate(tuple(path))
                verify_certificate(host, part, cert)
                witness[ell] = cert
        on_path[start] = 0
    return witness
