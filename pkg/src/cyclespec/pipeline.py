"""Top-level drivers: certified cycle spectra from dense graphs.

Each driver composes the extraction steps with the chord-path engine and
returns a certificate whose every cycle has been re-verified against the
input graph. Density gates are checked with exact arithmetic; in strict
mode a failed gate refuses, in permissive mode the construction is
attempted anyway and the result (or the failure) reports honestly.

The drivers never trust the math: every step the density gate guarantees
is still asserted, and such a step failing raises InternalContradiction
rather than returning a wrong certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .chordpaths import PartitionAB, path_spectrum_constructive
from .errors import (
    HypothesisNotMet,
    InputError,
    InternalContradiction,
    NotBipartite,
    ParseError,
)
from .extract import ChordedCycle, chorded_cycle, dense_ball, dense_layer_pair
from .graph import Graph, average_degree
from .metrics import (
    LayerDecomposition,
    bfs_layers,
    bipartition,
    densest_component,
    girth,
    radius_center,
    shortest_cycle,
    spanning_bipartite_half,
    verify_cycle,
)


@dataclass(frozen=True)
class SubtreeAssembly:
    """Minimal BFS subtree over a set of same-depth endpoints: its root,
    the climb distance r, each endpoint's branch id (the root's child it
    sits under) and its full path up to the root."""

    tree_root: int
    r: int
    branch_of: dict
    tree_paths: dict


@dataclass
class CycleSpectrumCertificate:
    """A verified run of consecutive cycle lengths.

    cycles is a tuple of (length, vertex tuple) sorted by length; interval
    is the claimed covered range (step 2 unless parity is "all"); r is the
    BFS-subtree climb distance so interval[0] = 2r + 2 (even mode) or
    2r + 1 (parity modes).
    """

    k: int
    girth_used: int
    r: int
    parity: str
    cycles: tuple
    radius_bound: int
    interval: tuple
    mode: str
    meta: dict = field(default_factory=dict)

    def lengths(self) -> list:
        return [length for length, _ in self.cycles]

    def to_dict(self) -> dict:
        return {
            "kind": "cycle-spectrum",
            "k": self.k,
            "girth_used": self.girth_used,
            "r": self.r,
            "parity": self.parity,
            "radius_bound": self.radius_bound,
            "interval": list(self.interval),
            "mode": self.mode,
            "cycles": [
                {"length": length, "vertices": list(verts)}
                for length, verts in self.cycles
            ],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CycleSpectrumCertificate":
        try:
            if d.get("kind") != "cycle-spectrum":
                raise ParseError(f"not a cycle-spectrum certificate: {d.get('kind')!r}")
            cycles = tuple(
                (int(c["length"]), tuple(int(v) for v in c["vertices"]))
                for c in d["cycles"]
            )
            return cls(
                k=int(d["k"]),
                girth_used=int(d["girth_used"]),
                r=int(d["r"]),
                parity=str(d["parity"]),
                cycles=cycles,
                radius_bound=int(d["radius_bound"]),
                interval=tuple(int(x) for x in d["interval"]),
                mode=str(d["mode"]),
                meta=dict(d.get("meta", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None


@dataclass
class EvenCycleResult:
    """A single verified cycle of the exact requested even length, plus the
    gate verdict that applied (reported even when the girth short-circuit
    makes the gate moot)."""

    k: int
    cycle: tuple
    via_girth_shortcut: bool
    girth: int
    gate: dict
    mode: str
    meta: dict = field(default_factory=dict)

    @property
    def target(self) -> int:
        return 2 * self.k

    def to_dict(self) -> dict:
        return {
            "kind": "single-cycle",
            "k": self.k,
            "target_length": self.target,
            "cycle": list(self.cycle),
            "via_girth_shortcut": self.via_girth_shortcut,
            "girth": self.girth,
            "gate": self.gate,
            "mode": self.mode,
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvenCycleResult":
        try:
            if d.get("kind") != "single-cycle":
                raise ParseError(f"not a single-cycle certificate: {d.get('kind')!r}")
            return cls(
                k=int(d["k"]),
                cycle=tuple(int(v) for v in d["cycle"]),
                via_girth_shortcut=bool(d["via_girth_shortcut"]),
                girth=int(d["girth"]),
                gate=dict(d["gate"]),
                mode=str(d["mode"]),
                meta=dict(d.get("meta", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed certificate: {exc}") from None


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def build_subtree_assembly(
    layers: LayerDecomposition, endpoints
) -> SubtreeAssembly:
    """Minimal BFS subtree containing the endpoints (all at one depth)."""
    eps = sorted({int(x) for x in endpoints})
    if len(eps) < 2:
        raise InternalContradiction(f"subtree needs >= 2 endpoints, got {eps}")
    depths = {int(layers.dist[x]) for x in eps}
    if len(depths) != 1:
        raise InternalContradiction(f"endpoints span depths {sorted(depths)}")
    level = depths.pop()
    chains = []
    for s in eps:
        chain = [s]
        while layers.parent[chain[-1]] >= 0:
            chain.append(int(layers.parent[chain[-1]]))
        if len(chain) != level + 1:
            raise InternalContradiction("parent chain length disagrees with depth")
        chains.append(chain)
    rev = [ch[::-1] for ch in chains]
    i = 1
    while i <= level and all(rv[i] == rev[0][i] for rv in rev):
        i += 1
    root = rev[0][i - 1]
    r = level - (i - 1)
    if r < 1:
        raise InternalContradiction("subtree root coincides with its endpoints")
    branch_of = {eps[j]: rev[j][i] for j in range(len(eps))}
    if len(set(branch_of.values())) < 2:
        raise InternalContradiction("minimal subtree does not branch at its root")
    tree_paths = {}
    owner = {}
    for j, s in enumerate(eps):
        path = tuple(chains[j][: r + 1])
        if path[-1] != root:
            raise InternalContradiction("tree path does not end at the subtree root")
        tree_paths[s] = path
        for v in path[:-1]:
            if owner.setdefault(v, branch_of[s]) != branch_of[s]:
                raise InternalContradiction(
                    f"vertex {v} lies on tree paths of two branches"
                )
    return SubtreeAssembly(tree_root=root, r=r, branch_of=branch_of, tree_paths=tree_paths)


def _close_cycle(asm: SubtreeAssembly, path_hosts) -> tuple:
    """Close an A-B path through the two tree paths into one cycle."""
    x, y = path_hosts[0], path_hosts[-1]
    up = asm.tree_paths[y]
    down = asm.tree_paths[x][::-1]
    return tuple(int(v) for v in list(path_hosts) + list(up[1:]) + list(down[1:-1]))


def _branch_partition(
    layers: LayerDecomposition, cc: ChordedCycle, endpoints
) -> tuple:
    """Assembly plus the A/B coloring: A = endpoint vertices under the
    subtree-root branch holding the smallest endpoint id, B = everything
    else on the cycle."""
    asm = build_subtree_assembly(layers, endpoints)
    chosen = asm.branch_of[min(endpoints)]
    a_hosts = {v for v in endpoints if asm.branch_of[v] == chosen}
    if not a_hosts or a_hosts == set(cc.cycle):
        raise InternalContradiction("branch partition degenerated to one side")
    part = PartitionAB(tuple(1 if v in a_hosts else 0 for v in cc.cycle))
    return asm, part


def _even_closures(gd: Graph, layers: LayerDecomposition, l: int, cc: ChordedCycle, k: int):
    """Close even A-B path lengths s = 2..(g'-2)k into cycles s + 2r.

    cc lives on two adjacent BFS layers with no intra-layer edges; its
    depth-l vertices are the path endpoints.
    """
    dist = layers.dist
    if cc.girth_used % 2:
        raise InternalContradiction(
            f"layer-pair core girth {cc.girth_used} is odd in a bipartite pair"
        )
    for v in cc.cycle:
        if int(dist[v]) not in (l, l + 1):
            raise InternalContradiction(f"cycle vertex {v} escapes layers {l},{l + 1}")
    endpoints = [v for v in cc.cycle if int(dist[v]) == l]
    asm, part = _branch_partition(layers, cc, endpoints)
    spectrum, trace = path_spectrum_constructive(cc, part)
    if spectrum.is_exception:
        raise InternalContradiction(
            "branch coloring matched the cycle bipartition; branching forbids this"
        )
    top = (cc.girth_used - 2) * k
    cycles = []
    for s in range(2, top + 1, 2):
        cert = spectrum.full[s]
        hosts = [cc.cycle[p] for p in cert.vertices]
        x, y = hosts[0], hosts[-1]
        if int(dist[y]) != l or asm.branch_of[y] == asm.branch_of[x]:
            raise InternalContradiction(
                f"even path of length {s} did not cross branches at depth {l}"
            )
        cyc = _close_cycle(asm, hosts)
        if len(cyc) != s + 2 * asm.r:
            raise InternalContradiction("closed cycle misses its target length")
        ok, why = verify_cycle(gd, cyc)
        if not ok:
            raise InternalContradiction(f"closed cycle invalid: {why}")
        cycles.append((s + 2 * asm.r, cyc))
    return cycles, asm.r, trace


def _parity_closures(gd: Graph, layers: LayerDecomposition, l: int, cc: ChordedCycle, k: int):
    """Close every available A-B path length on an intra-layer cycle: all
    lengths when the chord-path spectrum is full, odd lengths under the
    exception."""
    dist = layers.dist
    for v in cc.cycle:
        if int(dist[v]) != l:
            raise InternalContradiction(f"cycle vertex {v} escapes layer {l}")
    asm, part = _branch_partition(layers, cc, list(cc.cycle))
    spectrum, trace = path_spectrum_constructive(cc, part)
    paths = spectrum.paths()
    parity = "odd" if spectrum.is_exception else "all"
    cycles = []
    for s in sorted(paths):
        hosts = [cc.cycle[p] for p in paths[s].vertices]
        x, y = hosts[0], hosts[-1]
        if asm.branch_of[y] == asm.branch_of[x]:
            raise InternalContradiction(f"path of length {s} stayed in one branch")
        cyc = _close_cycle(asm, hosts)
        if len(cyc) != s + 2 * asm.r:
            raise InternalContradiction("closed cycle misses its target length")
        ok, why = verify_cycle(gd, cyc)
        if not ok:
            raise InternalContradiction(f"closed cycle invalid: {why}")
        cycles.append((s + 2 * asm.r, cyc))
    return cycles, asm.r, parity, trace


def _trace_meta(trace) -> dict:
    return {
        "m": trace.m,
        "d": trace.d,
        "bezout": list(trace.bezout) if trace.bezout else None,
        "case": trace.case,
        "extension_count": trace.extension_count,
    }


def _lift_chorded_cycle(cc: ChordedCycle, orig: np.ndarray) -> ChordedCycle:
    return ChordedCycle(
        cycle=tuple(int(orig[v]) for v in cc.cycle),
        chord=cc.chord,
        girth_used=cc.girth_used,
        core_size=cc.core_size,
    )


def consecutive_even_cycles(g: Graph, k: int, strict: bool = True) -> CycleSpectrumCertificate:
    """Cycles of (g'/2 - 1)k consecutive even lengths in a bipartite graph
    of average degree >= 4k, the shortest within twice the radius."""
    _check_k(k)
    if g.n == 0:
        raise InputError("empty graph")
    bip = bipartition(g)
    if not bip.bipartite:
        raise NotBipartite(
            "input contains an odd cycle",
            odd_cycle=[int(v) for v in bip.odd_cycle],
        )
    avg = average_degree(g)
    gate_ok = avg >= 4 * k
    if strict and not gate_ok:
        raise HypothesisNotMet(
            f"average degree {avg} < {4 * k}",
            average_degree=str(avg),
            required=4 * k,
        )
    gd, comp_orig = densest_component(g)
    rad, center = radius_center(gd)
    layers = bfs_layers(gd, center)
    try:
        l, pair = dense_layer_pair(gd, layers, k)
        cc = chorded_cycle(pair, k)
    except HypothesisNotMet:
        if gate_ok:
            raise InternalContradiction(
                "extraction failed although the average-degree gate held"
            ) from None
        raise
    cc = _lift_chorded_cycle(cc, pair.meta["orig_ids"])
    cycles, r, trace = _even_closures(gd, layers, l, cc, k)
    lo, hi = 2 * r + 2, 2 * r + (cc.girth_used - 2) * k
    if lo > 2 * rad:
        raise InternalContradiction(f"shortest cycle {lo} exceeds twice the radius {rad}")
    cert = CycleSpectrumCertificate(
        k=k,
        girth_used=cc.girth_used,
        r=r,
        parity="even",
        cycles=tuple(
            (length, tuple(int(comp_orig[v]) for v in verts))
            for length, verts in cycles
        ),
        radius_bound=2 * rad,
        interval=(lo, hi),
        mode="bipartite",
        meta={
            "gate": {
                "average_degree": str(avg),
                "required": 4 * k,
                "passed": bool(gate_ok),
            },
            "component": {"n": gd.n, "m": gd.m},
            "layer": l,
            "center": int(comp_orig[center]),
            "radius": rad,
            "core_size": cc.core_size,
            "trace": _trace_meta(trace),
        },
    )
    ok, why = verify_spectrum(g, cert)
    if not ok:
        raise InternalContradiction(f"produced certificate failed verification: {why}")
    return cert


def consecutive_even_cycles_general(g: Graph, k: int, strict: bool = True) -> CycleSpectrumCertificate:
    """The even-spectrum driver for arbitrary graphs: average degree >= 8k
    funds a spanning bipartite half that meets the bipartite gate."""
    _check_k(k)
    if g.n == 0:
        raise InputError("empty graph")
    avg = average_degree(g)
    gate_ok = avg >= 8 * k
    if strict and not gate_ok:
        raise HypothesisNotMet(
            f"average degree {avg} < {8 * k}",
            average_degree=str(avg),
            required=8 * k,
        )
    half, _sides = spanning_bipartite_half(g)
    try:
        cert = consecutive_even_cycles(half, k, strict=gate_ok)
    except HypothesisNotMet:
        if gate_ok:
            raise InternalContradiction(
                "bipartite half missed a gate the halving argument guarantees"
            ) from None
        raise
    cert.mode = "general-even"
    cert.meta = dict(cert.meta)
    cert.meta["outer_gate"] = {
        "average_degree": str(avg),
        "required": 8 * k,
        "passed": bool(gate_ok),
    }
    cert.meta["bipartite_half"] = {"kept_edges": half.m, "of": g.m}
    return cert


def _layer_histograms(g: Graph, dist: np.ndarray, depth: int):
    du, dv = dist[g.edge_u], dist[g.edge_v]
    lmin = np.minimum(du, dv)
    span = np.maximum(du, dv) - lmin
    if span.size and int(span.max()) > 1:
        raise InternalContradiction("edge jumps more than one BFS layer")
    cross = np.bincount(lmin[span == 1], minlength=depth + 2)
    intra = np.bincount(lmin[span == 0], minlength=depth + 2)
    sizes = np.bincount(dist, minlength=depth + 2)
    return cross, intra, sizes


def parity_interval_cycles(g: Graph, k: int, strict: bool = True) -> CycleSpectrumCertificate:
    """Cycles of every even length, every odd length, or every length over
    an interval [2r+1, 2r+(g'-2)k+1], from average degree >= 6k."""
    _check_k(k)
    if g.n == 0:
        raise InputError("empty graph")
    avg = average_degree(g)
    gate_ok = avg >= 6 * k
    if strict and not gate_ok:
        raise HypothesisNotMet(
            f"average degree {avg} < {6 * k}",
            average_degree=str(avg),
            required=6 * k,
        )
    gd, comp_orig = densest_component(g)
    rad, center = radius_center(gd)
    layers = bfs_layers(gd, center)
    dist = layers.dist
    depth = layers.depth
    cross, intra, sizes = _layer_histograms(gd, dist, depth)

    found = None
    for l in range(depth + 1):
        if l < depth and int(cross[l]) >= k * int(sizes[l] + sizes[l + 1]):
            found = (l, "cross-pair")
            break
        if int(intra[l]) >= k * int(sizes[l]):
            found = (l, "intra-layer")
            break
    if found is None:
        if gate_ok:
            raise InternalContradiction(
                "no dense layer slice although the average-degree gate held"
            )
        raise HypothesisNotMet(
            f"no dense layer slice: average degree {avg} < {6 * k}",
            average_degree=str(avg),
            required=6 * k,
        )
    l, case = found

    if case == "cross-pair":
        ids = np.flatnonzero((dist == l) | (dist == l + 1))
        du, dv = dist[gd.edge_u], dist[gd.edge_v]
        sel = np.flatnonzero((np.minimum(du, dv) == l) & (np.maximum(du, dv) == l + 1))
        lu = np.searchsorted(ids, gd.edge_u[sel])
        lv = np.searchsorted(ids, gd.edge_v[sel])
        host = Graph(len(ids), np.stack([lu, lv], axis=1))
        host.meta["orig_ids"] = ids
    else:
        host, host_orig = gd.subgraph(np.flatnonzero(dist == l))
        host.meta["orig_ids"] = host_orig

    try:
        cc = chorded_cycle(host, k)
    except HypothesisNotMet:
        raise InternalContradiction(
            "dense layer slice lost its density during extraction"
        ) from None
    cc = _lift_chorded_cycle(cc, host.meta["orig_ids"])

    if case == "cross-pair":
        cycles, r, trace = _even_closures(gd, layers, l, cc, k)
        parity = "even"
        lo, hi = 2 * r + 2, 2 * r + (cc.girth_used - 2) * k
        bound = 2 * rad
    else:
        cycles, r, parity, trace = _parity_closures(gd, layers, l, cc, k)
        lo, hi = 2 * r + 1, 2 * r + (cc.girth_used - 2) * k + 1
        bound = 2 * rad + 1
    cert = CycleSpectrumCertificate(
        k=k,
        girth_used=cc.girth_used,
        r=r,
        parity=parity,
        cycles=tuple(
            (length, tuple(int(comp_orig[v]) for v in verts))
            for length, verts in cycles
        ),
        radius_bound=bound,
        interval=(lo, hi),
        mode="parity-interval",
        meta={
            "gate": {
                "average_degree": str(avg),
                "required": 6 * k,
                "passed": bool(gate_ok),
            },
            "component": {"n": gd.n, "m": gd.m},
            "layer": l,
            "layer_case": case,
            "center": int(comp_orig[center]),
            "radius": rad,
            "core_size": cc.core_size,
            "trace": _trace_meta(trace),
        },
    )
    ok, why = verify_spectrum(g, cert)
    if not ok:
        raise InternalContradiction(f"produced certificate failed verification: {why}")
    return cert


def find_even_cycle_2k_bipartite(g: Graph, k: int, strict: bool = True) -> EvenCycleResult:
    """A cycle of length exactly 2k in a bipartite graph whose size clears
    the girth-dependent gate (girth 2k short-circuits the gate)."""
    _check_k(k)
    if g.n == 0:
        raise InputError("empty graph")
    bip = bipartition(g)
    if not bip.bipartite:
        raise NotBipartite(
            "input contains an odd cycle",
            odd_cycle=[int(v) for v in bip.odd_cycle],
        )
    gv = girth(g)
    if gv is math.inf:
        raise HypothesisNotMet("acyclic input cannot contain a cycle of length 2k")
    gv = int(gv)
    kp_raw = _ceil_div(2 * (k - 1), gv - 2)
    c = 4 * kp_raw
    gate_ok = g.m**k >= c**k * g.n ** (k + 1)
    gate = {"e": g.m, "n": g.n, "c": c, "girth": gv, "k": k, "passed": bool(gate_ok)}

    if gv == 2 * k:
        cyc = shortest_cycle(g)
        if len(cyc) != 2 * k:
            raise InternalContradiction("shortest cycle disagrees with the girth")
        return EvenCycleResult(
            k=k,
            cycle=tuple(int(v) for v in cyc),
            via_girth_shortcut=True,
            girth=gv,
            gate=gate,
            mode="bipartite",
        )
    if strict and not gate_ok:
        raise HypothesisNotMet(
            f"too few edges: e={g.m} < {c} * n^(1+1/{k}) with n={g.n}, girth={gv}",
            **gate,
        )
    if gate_ok and gv > 2 * k:
        raise InternalContradiction(
            f"girth {gv} > {2 * k} although the size gate held"
        )
    kp = max(2, kp_raw)
    ball = dense_ball(g, c, k, strict=strict)
    h = ball.subgraph
    horig = h.meta["orig_ids"]
    try:
        inner = consecutive_even_cycles(h, kp, strict=gate_ok)
    except HypothesisNotMet:
        if gate_ok:
            raise InternalContradiction(
                "dense ball missed the spectrum gate its density guarantees"
            ) from None
        raise
    by_length = dict(inner.cycles)
    if 2 * k not in by_length:
        if gate_ok:
            raise InternalContradiction(
                f"length {2 * k} missing from spectrum {sorted(by_length)}"
            )
        raise HypothesisNotMet(
            f"no cycle of length {2 * k} found below the size gate",
            lengths=sorted(by_length),
        )
    cyc = tuple(int(horig[v]) for v in by_length[2 * k])
    ok, why = verify_cycle(g, cyc)
    if not ok:
        raise InternalContradiction(f"lifted cycle invalid: {why}")
    return EvenCycleResult(
        k=k,
        cycle=cyc,
        via_girth_shortcut=False,
        girth=gv,
        gate=gate,
        mode="bipartite",
        meta={
            "k_prime": kp,
            "ball": ball.trace,
            "ball_center": ball.center,
            "inner_girth_used": inner.girth_used,
            "inner_r": inner.r,
            "inner_lengths": inner.lengths(),
        },
    )


def find_even_cycle_2k(g: Graph, k: int, strict: bool = True) -> EvenCycleResult:
    """A cycle of length exactly 2k in any graph with e >= 8(k-1)n^(1+1/k),
    through a spanning bipartite half."""
    _check_k(k)
    if g.n == 0:
        raise InputError("empty graph")
    c = 8 * (k - 1)
    gate_ok = g.m**k >= c**k * g.n ** (k + 1)
    gate = {"e": g.m, "n": g.n, "c": c, "k": k, "passed": bool(gate_ok)}
    if strict and not gate_ok:
        raise HypothesisNotMet(
            f"too few edges: e={g.m} < {c} * n^(1+1/{k}) with n={g.n}", **gate
        )
    half, _sides = spanning_bipartite_half(g)
    try:
        inner = find_even_cycle_2k_bipartite(half, k, strict=gate_ok)
    except HypothesisNotMet:
        if gate_ok:
            raise InternalContradiction(
                "bipartite half missed a gate the halving argument guarantees"
            ) from None
        raise
    ok, why = verify_cycle(g, inner.cycle)
    if not ok:
        raise InternalContradiction(f"cycle from the bipartite half invalid: {why}")
    meta = dict(inner.meta)
    meta["bipartite_half"] = {"kept_edges": half.m, "of": g.m}
    meta["half_gate"] = inner.gate
    return EvenCycleResult(
        k=k,
        cycle=inner.cycle,
        via_girth_shortcut=inner.via_girth_shortcut,
        girth=inner.girth,
        gate=gate,
        mode="general",
        meta=meta,
    )


def verify_spectrum(g: Graph, cert: CycleSpectrumCertificate) -> tuple:
    """Re-verify a spectrum certificate against its graph.

    Checks every cycle, the length progression (step and parity), the
    count promised for the declared mode, interval coverage, and
    the radius bound. Returns (ok, first_failure_reason)."""
    if not cert.cycles:
        return False, "certificate contains no cycles"
    if cert.parity not in ("even", "odd", "all"):
        return False, f"unknown parity tag {cert.parity!r}"
    lengths = []
    for length, verts in cert.cycles:
        if len(verts) != length:
            return False, f"cycle of declared length {length} has {len(verts)} vertices"
        ok, why = verify_cycle(g, verts)
        if not ok:
            return False, f"cycle of length {length}: {why}"
        lengths.append(length)
    step = 1 if cert.parity == "all" else 2
    for a, b in zip(lengths, lengths[1:]):
        if b - a != step:
            return False, f"lengths {a},{b} break the step-{step} progression"
    if cert.parity == "even" and any(x % 2 for x in lengths):
        return False, "odd length in an even-parity certificate"
    if cert.parity == "odd" and any(x % 2 == 0 for x in lengths):
        return False, "even length in an odd-parity certificate"
    gu, k, count = cert.girth_used, cert.k, len(lengths)
    if cert.parity == "even":
        if gu % 2:
            return False, f"even-parity certificate with odd girth_used {gu}"
        promised = (gu // 2 - 1) * k
        if count < promised:
            return False, f"only {count} cycles, promised {promised}"
    elif cert.parity == "odd":
        if 2 * count < (gu - 2) * k:
            return False, f"only {count} cycles, promised {(gu - 2) * k}/2"
    else:
        if count < (gu - 2) * k + 1:
            return False, f"only {count} cycles, promised {(gu - 2) * k + 1}"
    lo, hi = cert.interval
    have = set(lengths)
    want = range(lo, hi + 1, 1 if cert.parity == "all" else 2)
    missing = [x for x in want if x not in have]
    if missing:
        return False, f"interval [{lo},{hi}] misses lengths {missing}"
    if lengths[0] > cert.radius_bound:
        return False, f"shortest length {lengths[0]} exceeds bound {cert.radius_bound}"
    return True, None
