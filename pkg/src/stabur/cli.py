"""Command-line front end: file ingestion, evaluation commands, JSON/CSV output.

Commands
--------
bound      entropic lower bound for two stabilizer bases (group or graph files)
tightness  per-basis-state entropy averages and the attainment flag
matching   symmetric difference, anticommuting pairing, and the S0/2 bound
boundary   saturation-curve samples for two anticommuting observables
verify     seeded self-check suites

Input files are auto-detected: a file whose first significant line is a bare
integer is a graph (vertex count, then one ``i j`` edge per line); otherwise
it must hold one signed Pauli string per line.  ``#`` starts a comment.

Numbers in JSON output are exact dyadics ``{"num": ..., "log2_den": ...}``
where the value is exactly representable that way, floats rounded to 12
significant digits otherwise, so identical inputs and seeds give
byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import graphstate, stabgroup, urelations
from .entropy import EntropySpec, boundary_curve
from .oracle import stabilizer_state_dense
from .suites import run_suite

import numpy as np


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabur",
        description="Entropic uncertainty bounds for stabilizer and graph-state bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="lower bound for two stabilizer bases")
    p_bound.add_argument("inputs", nargs=2, help="two group files or two graph files")
    p_bound.add_argument("--max-n", type=int, default=8, help="dense cross-check limit")
    p_bound.add_argument("--out", help="write JSON here instead of stdout")
    p_bound.set_defaults(func=_cmd_bound)

    p_tight = sub.add_parser("tightness", help="attainment check over all basis states")
    p_tight.add_argument("inputs", nargs=2, help="two group files")
    _add_entropy_flags(p_tight)
    p_tight.add_argument("--max-n", type=int, default=8)
    p_tight.add_argument("--out", help="write JSON here instead of stdout")
    p_tight.set_defaults(func=_cmd_tightness)

    p_match = sub.add_parser("matching", help="anticommuting pairing of the symmetric difference")
    p_match.add_argument("inputs", nargs=2, help="two group files")
    _add_entropy_flags(p_match)
    p_match.add_argument("--samples", type=int, default=200, help="random states to sample")
    p_match.add_argument("--seed", type=int, default=42)
    p_match.add_argument("--max-n", type=int, default=8)
    p_match.add_argument("--out", help="also write the matched index pairs as CSV here")
    p_match.set_defaults(func=_cmd_matching)

    p_curve = sub.add_parser("boundary", help="expectation-value saturation curve")
    _add_entropy_flags(p_curve)
    p_curve.add_argument("--samples", type=int, default=101, help="points per quadrant")
    p_curve.add_argument("--out", help="write CSV here instead of stdout")
    p_curve.set_defaults(func=_cmd_boundary)

    p_verify = sub.add_parser("verify", help="run a named self-check suite")
    p_verify.add_argument(
        "suite",
        choices=["pauli", "overlap", "tightness", "anticommuting", "matching", "recurrence", "all"],
    )
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--restarts", type=int, default=40, help="search restarts where applicable")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker threads for search restarts")
    p_verify.add_argument("--out", help="write JSON here instead of stdout")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def _add_entropy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--entropy", choices=["shannon", "min", "tsallis"], default="shannon")
    parser.add_argument("--q", type=float, default=None, help="tsallis parameter (q > 1)")


def _entropy_spec(args) -> EntropySpec:
    return EntropySpec(args.entropy, args.q)


def _cmd_bound(args) -> int:
    kinds = [_detect_kind(path) for path in args.inputs]
    if kinds[0] != kinds[1]:
        raise ValueError("cannot mix a graph file with a generator file")
    if kinds[0] == "graph":
        g1 = graphstate.read_graph_file(args.inputs[0])
        g2 = graphstate.read_graph_file(args.inputs[1])
        bound = graphstate.mu_bound_graphs(g1, g2)
        table = graphstate.amplitude_transform(graphstate.graph_sum(g1, g2))
        r = table.r_max
        s, t = graphstate.graph_group(g1), graphstate.graph_group(g2)
        report = stabgroup.overlap_squared(s, t)
        cross = stabgroup.mu_bound_stabilizer(s, t)
        agreement = bound == cross
        method = "recurrence"
    else:
        s = stabgroup.read_generator_file(args.inputs[0])
        t = stabgroup.read_generator_file(args.inputs[1])
        report = stabgroup.overlap_squared(s, t)
        inter = stabgroup.intersect(s, t)
        bound = stabgroup.mu_bound_stabilizer(s, t)
        r = 2.0 ** (-(s.n - inter.c) / 2)
        if (s.n - inter.c) % 2 == 0:
            r = Fraction(1, 2 ** ((s.n - inter.c) // 2))
        method = "intersection"
        agreement = None
        if s.n <= args.max_n:
            agreement = abs(bound - _dense_bound(s, t)) <= 1e-9
    inter_c = int(round(s.n - 2 * bound))
    payload = {
        "agreement": agreement,
        "bound_bits": bound,
        "c": inter_c,
        "method": method,
        "n": s.n,
        "overlap_squared": _number(report.overlap_squared),
        "p": report.p,
        "q": report.q,
        "r": _number(r),
    }
    _emit_json(payload, args.out)
    return 0 if agreement in (True, None) else 1


def _cmd_tightness(args) -> int:
    spec = _entropy_spec(args)
    if spec.kind != "shannon":
        raise ValueError("the tightness check is a statement about the Shannon entropy")
    s = stabgroup.read_generator_file(args.inputs[0])
    t = stabgroup.read_generator_file(args.inputs[1])
    report = urelations.check_tightness(s, t, max_n=args.max_n)
    payload = {
        "achieved": report.achieved,
        "bound": report.bound,
        "table": [
            {"average": avg, "basis": tag, "label": format(lab, f"0{s.n}b")}
            for tag, lab, avg in report.per_state
        ],
        "tight": report.tight,
        "witness": report.witness,
    }
    _emit_json(payload, args.out)
    return 0 if report.tight else 1


def _cmd_matching(args) -> int:
    spec = _entropy_spec(args)
    s = stabgroup.read_generator_file(args.inputs[0])
    t = stabgroup.read_generator_file(args.inputs[1])
    diff = urelations.symmetric_difference(s, t)
    matching = urelations.perfect_matching(diff)
    report = urelations.group_ur_verify(
        s, t, spec, num_random=args.samples, seed=args.seed, max_n=args.max_n
    )
    payload = {
        "L": diff.L,
        "achieved": report.achieved,
        "bound": report.bound,
        "entropy": spec.label(),
        "pairs": [list(pair) for pair in matching.pairs],
        "tight": report.tight,
        "witness": report.witness,
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["k", "l"])
            writer.writerows(matching.pairs)
    _emit_json(payload, None)
    return 0 if report.tight else 1


def _cmd_boundary(args) -> int:
    spec = _entropy_spec(args)
    points = boundary_curve(spec, args.samples)
    q_text = "" if spec.q is None else format(spec.q, ".12g")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a1", "a2", "entropy_kind", "q"])
    seen = set()
    for sign1, sign2 in ((1, 1), (-1, 1), (-1, -1), (1, -1)):
        for a1, a2 in points:
            key = (format(sign1 * a1 + 0.0, ".12g"), format(sign2 * a2 + 0.0, ".12g"))
            if key in seen:
                continue
            seen.add(key)
            writer.writerow([key[0], key[1], spec.kind, q_text])
    _emit_text(buf.getvalue(), args.out)
    return 0


def _cmd_verify(args) -> int:
    log = run_suite(args.suite, seed=args.seed, restarts=args.restarts, jobs=args.jobs)
    _emit_json(log, args.out)
    return 0 if log["passed"] else 1


def _detect_kind(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            return "graph" if text.isdigit() else "group"
    raise ValueError(f"{path}: empty input file")


def _dense_bound(s: stabgroup.StabilizerGroup, t: stabgroup.StabilizerGroup) -> float:
    size = 1 << s.n
    mat_s = np.asarray(
        [stabilizer_state_dense(stabgroup.basis_state_group(s, k)).data for k in range(size)]
    )
    mat_t = np.asarray(
        [stabilizer_state_dense(stabgroup.basis_state_group(t, k)).data for k in range(size)]
    )
    return float(-math.log2(float(np.max(np.abs(mat_s.conj() @ mat_t.T)))))


def _number(value):
    """Exact dyadics as {"num", "log2_den"}; other reals as 12-digit floats."""
    if isinstance(value, Fraction):
        log2_den = value.denominator.bit_length() - 1
        if value.denominator == 1 << log2_den:
            return {"num": value.numerator, "log2_den": log2_den}
        value = float(value)
    return _round12(value)


def _round12(x):
    if isinstance(x, bool) or not isinstance(x, float):
        return x
    return float(format(x, ".12g"))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return _round12(obj)


def _emit_json(payload, out: Optional[str]) -> None:
    _emit_text(json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n", out)


def _emit_text(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
