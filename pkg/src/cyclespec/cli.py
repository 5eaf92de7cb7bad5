"""Command-line surface: ingest graphs, run drivers, emit and verify
JSON certificate documents.

Every document is deterministic for identical inputs and seeds: keys are
sorted, numbers are integers or exact rational strings, and nothing draws
on the clock or OS entropy. Exit codes: 0 success, 1 hypothesis not met,
2 parse/input/budget, 3 verification failure, 4 internal contradiction.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from .chordpaths import PartitionAB
from .errors import (
    CyclespecError,
    HypothesisNotMet,
    InputError,
    InternalContradiction,
    NotBipartite,
    ParseError,
    VerificationFailure,
)
from .extract import ChordedCycle
from .generators import GenSpec, generate, model_names
from .graph import Graph, average_degree, graph_sha256, parse_graph, serialize
from .metrics import (
    bipartition,
    densest_component,
    even_girth,
    girth,
    radius_center,
    verify_cycle,
)
from .oracle import brute_ab_path_lengths, brute_cycle_spectrum
from .pipeline import (
    CycleSpectrumCertificate,
    EvenCycleResult,
    consecutive_even_cycles,
    consecutive_even_cycles_general,
    find_even_cycle_2k,
    find_even_cycle_2k_bipartite,
    parity_interval_cycles,
    verify_spectrum,
)
from .rng import Stream

SCHEMA_VERSION = "1"

_MODEL_ALIASES = {"projective": "projective_incidence"}


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, Fraction):
        return str(o)
    raise TypeError(f"not JSON-serializable: {type(o).__name__}")


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n"


def _write_out(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(message: str, code: int) -> int:
    sys.stderr.write(f"cyclespec: error: {message}\n")
    return code


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    g = parse_graph(text)
    got = g.meta.get("format", "edgelist")
    if fmt != "auto" and got != fmt:
        raise ParseError(f"{path} parsed as {got}, but --format {fmt} was given")
    return g


def _graph_header(g: Graph) -> dict:
    return {
        "n": g.n,
        "e": g.m,
        "format": g.meta.get("format", "edgelist"),
        "sha256": graph_sha256(g),
    }


def _document(argv: list, g: Graph | None, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "cyclespec",
        "command": list(argv),
        "graph_header": _graph_header(g) if g is not None else None,
        "result": result,
    }


def _hnm_result(exc: HypothesisNotMet) -> dict:
    return {
        "kind": "hypothesis-not-met",
        "message": str(exc),
        "details": {k: exc.details[k] for k in sorted(exc.details)},
    }


# ---------------------------------------------------------------- analyze


def _analysis_result(g: Graph) -> dict:
    if g.n == 0:
        return {
            "kind": "analysis-report",
            "n": 0,
            "e": 0,
            "average_degree": "0",
            "bipartite": True,
            "odd_cycle": None,
            "girth": None,
            "even_girth": None,
            "radius": None,
            "center": None,
            "densest_component": {"n": 0, "m": 0},
        }
    bip = bipartition(g)
    gv = girth(g)
    ev = even_girth(g)
    comp, comp_orig = densest_component(g)
    rad, center = radius_center(comp)
    return {
        "kind": "analysis-report",
        "n": g.n,
        "e": g.m,
        "average_degree": str(average_degree(g)),
        "bipartite": bip.bipartite,
        "odd_cycle": [int(v) for v in bip.odd_cycle] if not bip.bipartite else None,
        "girth": None if gv is math.inf else int(gv),
        "even_girth": None if ev is math.inf else int(ev),
        "radius": int(rad),
        "center": int(comp_orig[center]),
        "densest_component": {"n": comp.n, "m": comp.m},
    }


def _analysis_table(r: dict) -> str:
    rows = [
        ("n", r["n"]),
        ("e", r["e"]),
        ("average degree", r["average_degree"]),
        ("bipartite", "yes" if r["bipartite"] else "no"),
    ]
    if r["odd_cycle"] is not None:
        rows.append(("odd cycle", " ".join(str(v) for v in r["odd_cycle"])))
    rows += [
        ("girth", "inf" if r["girth"] is None else r["girth"]),
        ("even girth", "inf" if r["even_girth"] is None else r["even_girth"]),
        ("radius", "-" if r["radius"] is None else r["radius"]),
        ("densest component", f"n={r['densest_component']['n']} m={r['densest_component']['m']}"),
    ]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def cmd_analyze(ns, argv) -> int:
    g = _load_graph(ns.graph, ns.format)
    result = _analysis_result(g)
    if ns.json:
        _write_out(_dump(_document(argv, g, result)), ns.output)
    else:
        _write_out(_analysis_table(result), ns.output)
    return 0


# ---------------------------------------------------------------- spectrum


_SPECTRUM_DRIVERS = {
    "bipartite": consecutive_even_cycles,
    "general": consecutive_even_cycles_general,
    "parity": parity_interval_cycles,
}


def cmd_spectrum(ns, argv) -> int:
    g = _load_graph(ns.graph, ns.format)
    driver = _SPECTRUM_DRIVERS[ns.mode]
    try:
        cert = driver(g, ns.k, strict=not ns.force)
    except HypothesisNotMet as exc:
        _write_out(_dump(_document(argv, g, _hnm_result(exc))), ns.output)
        return 1
    _write_out(_dump(_document(argv, g, cert.to_dict())), ns.output)
    return 0


def cmd_evencycle(ns, argv) -> int:
    g = _load_graph(ns.graph, ns.format)
    driver = find_even_cycle_2k_bipartite if ns.bipartite else find_even_cycle_2k
    try:
        res = driver(g, ns.k, strict=not ns.force)
    except HypothesisNotMet as exc:
        _write_out(_dump(_document(argv, g, _hnm_result(exc))), ns.output)
        return 1
    _write_out(_dump(_document(argv, g, res.to_dict())), ns.output)
    return 0


# ---------------------------------------------------------------- verify


def _verify_single_cycle(g: Graph, result: dict) -> tuple:
    res = EvenCycleResult.from_dict(result)
    if len(res.cycle) != 2 * res.k:
        return False, f"cycle has {len(res.cycle)} vertices, target is {2 * res.k}"
    ok, why = verify_cycle(g, res.cycle)
    if not ok:
        return False, why
    gate = res.gate
    if int(gate.get("e", g.m)) != g.m or int(gate.get("n", g.n)) != g.n:
        return False, "gate was evaluated on a different graph"
    return True, None


def _verify_result(g: Graph | None, result: dict) -> tuple:
    kind = result.get("kind")
    if kind == "cycle-spectrum":
        cert = CycleSpectrumCertificate.from_dict(result)
        return verify_spectrum(g, cert)
    if kind == "single-cycle":
        return _verify_single_cycle(g, result)
    if kind == "analysis-report":
        fresh = _analysis_result(g)
        for key in fresh:
            if result.get(key) != fresh[key]:
                return False, f"field {key!r}: certificate has {result.get(key)!r}, graph has {fresh[key]!r}"
        return True, None
    if kind == "oracle-spectrum":
        lengths = sorted(brute_cycle_spectrum(g, int(result["max_len"])))
        if list(result["lengths"]) != lengths:
            return False, f"spectrum mismatch: certificate {result['lengths']}, oracle {lengths}"
        return True, None
    if kind == "oracle-abpaths":
        fresh = _abpaths_result(
            int(result["length"]),
            tuple(int(x) for x in result["chord"]),
            [int(x) for x in result["part_a"]],
        )
        if list(result["lengths"]) != fresh["lengths"]:
            return False, f"path-length mismatch: certificate {result['lengths']}, oracle {fresh['lengths']}"
        return True, None
    if kind == "fuzz-report":
        fresh = _fuzz_run(
            trials=int(result["trials"]),
            k=int(result["k"]),
            mode=str(result["mode"]),
            seed=int(result["seed"]),
        )
        if fresh != result:
            return False, "fuzz report does not reproduce"
        return True, None
    if kind == "hypothesis-not-met":
        return True, None
    return False, f"unknown result kind {kind!r}"


def cmd_verify(ns, argv) -> int:
    try:
        with open(ns.cert, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {ns.cert}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{ns.cert} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported certificate schema: {doc.get('schema_version')!r}")
    header = doc.get("graph_header")
    result = doc.get("result")
    if not isinstance(result, dict):
        raise ParseError("certificate has no result object")

    g = None
    reason = None
    if header is not None:
        if ns.graph is None:
            raise InputError("this certificate references a graph; pass the graph file")
        g = _load_graph(ns.graph, ns.format)
        if header.get("sha256") != graph_sha256(g):
            reason = "graph hash mismatch: certificate was issued for a different graph"
    elif ns.graph is not None:
        raise InputError("this certificate references no graph; drop the graph file")

    if reason is None:
        try:
            ok, why = _verify_result(g, result)
        except CyclespecError as exc:
            ok, why = False, str(exc)
        if not ok:
            reason = why
    verdict = {
        "kind": "verification-verdict",
        "verdict": "ok" if reason is None else "fail",
        "reason": reason,
        "result_kind": result.get("kind"),
    }
    _write_out(_dump(_document(argv, g, verdict)), ns.output)
    return 0 if reason is None else 3


# ---------------------------------------------------------------- gen


def _parse_extra_params(extra: list) -> dict:
    params = {}
    it = iter(extra)
    for token in it:
        if not token.startswith("--") or len(token) == 2:
            raise InputError(f"expected --name value pairs after --model, got {token!r}")
        name = token[2:].replace("-", "_")
        try:
            raw = next(it)
        except StopIteration:
            raise InputError(f"missing value for --{name}") from None
        try:
            params[name] = int(raw)
        except ValueError:
            params[name] = raw
    return params


def cmd_gen(ns, argv, extra: list) -> int:
    model = _MODEL_ALIASES.get(ns.model, ns.model)
    spec = GenSpec(model=model, params=_parse_extra_params(extra), seed=ns.seed)
    g = generate(spec)
    text = f"# genspec {spec.describe()}\n" + serialize(g)
    _write_out(text, ns.output)
    return 0


# ---------------------------------------------------------------- oracle


def _abpaths_result(length: int, chord: tuple, part_a: list) -> dict:
    host = ChordedCycle(
        cycle=tuple(range(length)), chord=chord, girth_used=0, core_size=length
    )
    part = PartitionAB.from_a(length, part_a)
    lengths = sorted(brute_ab_path_lengths(host, part))
    return {
        "kind": "oracle-abpaths",
        "length": length,
        "chord": list(chord),
        "part_a": sorted(part_a),
        "lengths": lengths,
    }


def _parse_csv_ints(text: str, what: str) -> list:
    if text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def cmd_oracle(ns, argv) -> int:
    if ns.which == "spectrum":
        g = _load_graph(ns.graph, ns.format)
        lengths = sorted(brute_cycle_spectrum(g, ns.max_len))
        result = {"kind": "oracle-spectrum", "max_len": ns.max_len, "lengths": lengths}
        _write_out(_dump(_document(argv, g, result)), ns.output)
        return 0
    chord = _parse_csv_ints(ns.chord, "--chord")
    if len(chord) != 2:
        raise InputError(f"--chord needs two positions, got {ns.chord!r}")
    part_a = _parse_csv_ints(ns.part_a, "--part-a")
    result = _abpaths_result(ns.length, (chord[0], chord[1]), part_a)
    _write_out(_dump(_document(argv, None, result)), ns.output)
    return 0


# ---------------------------------------------------------------- fuzz


def _random_pair_graph(n: int, p: Fraction, seed: int) -> Graph:
    """Bernoulli draw per vertex pair in lexicographic order (fuzz only)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    hits = Stream(seed).bernoulli_block(len(pairs), p)
    edges = [pairs[i] for i in np.flatnonzero(hits)]
    return Graph(n, edges)


def _fuzz_trial_graph(mode: str, k: int, trial: int, seed: int) -> Graph:
    s = Stream(seed * 1_000_003 + trial)
    gate = {"bipartite": 4 * k, "general": 8 * k, "parity": 6 * k}[mode]
    low = trial % 2 == 1
    target = gate - 1 - s.below(max(1, gate // 2)) if low else gate + 1 + s.below(k)
    if mode == "bipartite":
        n1 = 20 + s.below(41)
        n2 = 20 + s.below(41)
        p = min(Fraction(target * (n1 + n2), 2 * n1 * n2), Fraction(1))
        return generate(
            GenSpec("random_bipartite", {"n1": n1, "n2": n2, "p": str(p)}, seed=s.next_u64())
        )
    n = 24 + s.below(37)
    p = min(Fraction(target, n - 1), Fraction(1))
    return _random_pair_graph(n, p, s.next_u64())


def _fuzz_run(trials: int, k: int, mode: str, seed: int) -> dict:
    driver = _SPECTRUM_DRIVERS[mode]
    ok = hypothesis = not_bipartite = cycles_total = 0
    for t in range(trials):
        g = _fuzz_trial_graph(mode, k, t, seed)
        try:
            cert = driver(g, k, strict=True)
        except NotBipartite:
            not_bipartite += 1
            continue
        except HypothesisNotMet:
            hypothesis += 1
            continue
        good, why = verify_spectrum(g, cert)
        if not good:
            raise VerificationFailure(f"trial {t}: {why}")
        ok += 1
        cycles_total += len(cert.cycles)
    return {
        "kind": "fuzz-report",
        "mode": mode,
        "k": k,
        "trials": trials,
        "seed": seed,
        "ok": ok,
        "hypothesis_not_met": hypothesis,
        "not_bipartite": not_bipartite,
        "cycles_verified": cycles_total,
    }


def cmd_fuzz(ns, argv) -> int:
    result = _fuzz_run(trials=ns.trials, k=ns.k, mode=ns.mode, seed=ns.seed)
    _write_out(_dump(_document(argv, None, result)), ns.output)
    return 0


# ---------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    gate = common.add_mutually_exclusive_group()
    gate.add_argument("--strict", action="store_true", help="refuse when a gate fails (default)")
    gate.add_argument("--force", action="store_true", help="attempt the construction anyway")
    common.add_argument("-o", "--output", metavar="FILE", help="write output to FILE")
    common.add_argument(
        "--format",
        choices=["auto", "edgelist", "dimacs"],
        default="auto",
        help="input graph format (default: detect)",
    )

    p = argparse.ArgumentParser(prog="cyclespec", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("analyze", parents=[common], help="report graph facts")
    sp.add_argument("graph")

    sp = sub.add_parser("spectrum", parents=[common], help="certify a run of cycle lengths")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--mode", choices=["bipartite", "general", "parity"], default="bipartite")

    sp = sub.add_parser("evencycle", parents=[common], help="certify one cycle of length 2k")
    sp.add_argument("graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--bipartite", action="store_true", help="input is bipartite; use the tighter gate")

    sp = sub.add_parser("verify", parents=[common], help="re-verify a certificate")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--cert", required=True, metavar="FILE")

    sp = sub.add_parser("gen", parents=[common], help="generate a graph file")
    sp.add_argument("--model", required=True, help=f"one of: {', '.join(model_names())}")

    sp = sub.add_parser("oracle", parents=[common], help="run a brute-force oracle")
    osub = sp.add_subparsers(dest="which", required=True)
    od = osub.add_parser("spectrum", parents=[common], help="exact cycle-length set")
    od.add_argument("graph")
    od.add_argument("--max-len", type=int, required=True)
    od = osub.add_parser("abpaths", parents=[common], help="exact A-B path lengths on a chorded cycle")
    od.add_argument("--length", type=int, required=True)
    od.add_argument("--chord", required=True, metavar="I,J")
    od.add_argument("--part-a", required=True, metavar="CSV")

    sp = sub.add_parser("fuzz", parents=[common], help="drive random graphs through a spectrum driver")
    sp.add_argument("--trials", type=int, default=25)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--mode", choices=["bipartite", "general", "parity"], default="bipartite")

    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    if argv and argv[0] == "gen":
        ns, extra = parser.parse_known_args(argv)
    else:
        ns, extra = parser.parse_args(argv), []
    try:
        if ns.cmd == "analyze":
            return cmd_analyze(ns, argv)
        if ns.cmd == "spectrum":
            return cmd_spectrum(ns, argv)
        if ns.cmd == "evencycle":
            return cmd_evencycle(ns, argv)
        if ns.cmd == "verify":
            return cmd_verify(ns, argv)
        if ns.cmd == "gen":
            return cmd_gen(ns, argv, extra)
        if ns.cmd == "oracle":
            return cmd_oracle(ns, argv)
        if ns.cmd == "fuzz":
            return cmd_fuzz(ns, argv)
        return _fail(f"unknown command {ns.cmd!r}", 2)
    except InternalContradiction as exc:
        return _fail(f"internal contradiction: {exc}", exc.exit_code)
    except VerificationFailure as exc:
        return _fail(str(exc), exc.exit_code)
    except HypothesisNotMet as exc:
        return _fail(str(exc), exc.exit_code)
    except CyclespecError as exc:
        return _fail(str(exc), exc.exit_code)


if __name__ == "__main__":
    sys.exit(main())
