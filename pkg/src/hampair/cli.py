"""Command-line surface: cut tables, ray tables, parameter scans,
witness construction, and witness verification.

Data goes to stdout (or --out); progress and diagnostics go to stderr.
Exit codes: 0 success, 1 check or verification failure, 2 usage or
malformed input, 3 inconclusive (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import family_one, family_two, lattice, oracle, products, scan
from .core import InputError, cayley
from .witness import MalformedWitness, WitnessFile, witness_from_json

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

ENV_PREFIX = "HAMPAIR_"


def _env_default(name: str, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    return type(fallback)(raw) if fallback is not None else raw


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _intlist(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in raw.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}")


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def cmd_cuts(args) -> int:
    profile = family_one.cut_set(args.k, args.a)
    rs = lattice.ray_system(args.k, args.a)
    gp = lattice.gap_profile(profile.Z, profile.N)
    graph = lattice.reflected_gap_graph(profile.Z, profile.N)
    pair = family_one.count_pair(args.k, args.a)
    record = {
        "k": args.k,
        "a": args.a % args.k,
        "N": profile.N,
        "Z": list(profile.Z),
        "reflected": [profile.N - z for z in reversed(profile.Z)],
        "delta": profile.delta,
        "witness": list(profile.witness),
        "count_pair": list(pair),
        "c_L": gp.c_L,
        "c_R": gp.c_R,
        "lambdas": list(gp.lambdas),
        "rays": [{"ray": list(r), "mult": h} for r, h in zip(rs.rays, rs.mults)],
        "negative_edges": [list(e) for e in graph.negative_edges],
        "positive_edges": [list(e) for e in graph.positive_edges],
    }
    if args.format == "json":
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        text = "k,a,Z,delta,c_L,c_R,count_d,count_e\n" + (
            f"{args.k},{args.a % args.k},{';'.join(map(str, profile.Z))},"
            f"{profile.delta},{gp.c_L},{gp.c_R},{pair[0]},{pair[1]}\n"
        )
    else:
        lines = [
            f"k={args.k} a={args.a % args.k} N={profile.N}",
            f"Z        = {_fmt_set(profile.Z)}",
            f"N-Z      = {_fmt_set(record['reflected'])}",
            f"dist     = {profile.delta} (witness {profile.witness})",
            f"caps     = c_L={gp.c_L}, c_R={gp.c_R}; internal gaps {list(gp.lambdas)}",
            f"pair     = {pair} (sum {sum(pair)})",
            "rays     = "
            + ", ".join(f"{r}:{h}" for r, h in zip(rs.rays, rs.mults)),
            f"gap graph: negative {list(graph.negative_edges)}, "
            f"positive {list(graph.positive_edges)}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_rays(args) -> int:
    rs = lattice.ray_system(args.k, args.a)
    U = rs.cut_values()
    if args.format == "json":
        record = {
            "k": args.k,
            "a": args.a % args.k,
            "m": rs.params.m,
            "n": rs.params.n,
            "e": rs.params.e,
            "N": rs.params.N,
            "rays": [list(r) for r in rs.rays],
            "mults": list(rs.mults),
            "cut_values": U,
        }
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["index,ray_x,ray_y,mult,cut_value"]
        for i, ((x, y), h) in enumerate(zip(rs.rays, rs.mults)):
            u = U[i] if i < len(U) else ""
            lines.append(f"{i},{x},{y},{h},{u}")
        text = "\n".join(lines) + "\n"
    else:
        p = rs.params
        lines = [
            f"k={p.k} a={p.a} m={p.m} n={p.n} e={p.e} N={p.N} "
            f"L(x,y)={p.m}x+{p.n - p.e}y",
            "ray        mult  cut",
        ]
        for i, ((x, y), h) in enumerate(zip(rs.rays, rs.mults)):
            u = U[i] if i < len(U) else "-"
            lines.append(f"({x:>2},{y:>2})  {h:>5}  {u:>4}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _scan_text(rows, summary, fmt: str) -> str:
    if fmt == "json":
        lines = []
        for r in rows:
            lines.append(
                json.dumps(
                    {
                        "k": r.k,
                        "a": r.a,
                        "Z": list(r.Z),
                        "delta": r.delta,
                        "c_L": r.c_L,
                        "c_R": r.c_R,
                        "count_d": r.count_pair[0],
                        "count_e": r.count_pair[1],
                        "lattice_agrees": r.lattice_agrees,
                        "failures": list(r.failures),
                    }
                )
            )
        lines.append(
            json.dumps(
                {
                    "summary": {
                        "cells": summary.cells,
                        "failures": summary.failures,
                        "even_k_sum_k_minus_2": summary.sum_k_minus_2,
                        "even_k_sum_k": summary.sum_k,
                    }
                }
            )
        )
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        lines = ["k,a,Z,delta,c_L,c_R,count_d,count_e,lattice_agrees"]
        for r in rows:
            lines.append(
                f"{r.k},{r.a},{';'.join(map(str, r.Z))},{r.delta},"
                f"{r.c_L},{r.c_R},{r.count_pair[0]},{r.count_pair[1]},"
                f"{str(r.lattice_agrees).lower()}"
            )
        return "\n".join(lines) + "\n"
    lines = ["   k   a  delta  c_L  c_R  pair        Z"]
    for r in rows:
        flag = "" if r.ok else "  FAIL: " + "; ".join(r.failures)
        lines.append(
            f"{r.k:>4} {r.a:>3} {r.delta:>6} {r.c_L:>4} {r.c_R:>4}  "
            f"{str(r.count_pair):<10}  {_fmt_set(r.Z)}{flag}"
        )
    lines.append(
        f"cells={summary.cells} failures={summary.failures} "
        f"even-k sums: k-2 x{summary.sum_k_minus_2}, k x{summary.sum_k}"
    )
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> int:
    checks = tuple(args.checks) if args.checks else scan.ALL_CHECKS
    try:
        rows, summary = scan.run_scan(args.k_min, args.k_max, checks, jobs=args.jobs)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(_scan_text(rows, summary, args.format), args.out)
    if summary.failures:
        bad = summary.first_failure
        print(
            f"FAILED: {summary.failures} check failures; "
            f"first at k={bad.k} a={bad.a}: {bad.failures[0]}",
            file=sys.stderr,
        )
        return EXIT_FAIL
    return EXIT_OK


def cmd_build(args) -> int:
    budget = args.budget
    try:
        if args.family == "one":
            k, a = args.params
            realized = family_one.realize_disjoint_pair(k, a, budget)
            pair = (realized.path1, realized.path2)
            digraph = pair[0].digraph
            params = {"k": k, "a": a}
            print(f"realization stage: {realized.stage}", file=sys.stderr)
        elif args.family == "two":
            a, L = args.params
            pair = family_two.build_family_two(a, L)
            digraph = pair[0].digraph
            params = {"a": a, "L": L}
        elif args.family == "product":
            m, n, ell = args.params
            pair = products.build_three_factor(m, n, ell, budget)
            digraph = pair[0].digraph
            params = {"m": m, "n": n, "l": ell}
        else:  # search
            digraph = cayley(args.orders, args.gen_a, args.gen_b)
            outcome = oracle.find_arc_disjoint_pair(digraph, budget)
            if outcome.status is oracle.Status.INCONCLUSIVE:
                print("search inconclusive: node budget exhausted", file=sys.stderr)
                return EXIT_INCONCLUSIVE
            if not outcome.found:
                print("no arc-disjoint Hamiltonian path pair exists", file=sys.stderr)
                return EXIT_FAIL
            pair = outcome.pair
            params = {f"order_{i}": o for i, o in enumerate(args.orders)}
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"builder failed: {exc}", file=sys.stderr)
        return EXIT_FAIL

    wf = WitnessFile(args.family, params, digraph, pair[0], pair[1])
    ok, reason = wf.verify()
    if not ok:
        print(f"internal error: built witness fails verification: {reason}", file=sys.stderr)
        return EXIT_FAIL
    _emit(wf.to_json(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.file) as fh:
            wf = witness_from_json(fh.read())
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MalformedWitness as exc:
        print(f"malformed witness file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ok, reason = wf.verify()
    if not ok:
        print(f"verification failed: {reason}", file=sys.stderr)
        return EXIT_FAIL
    print("ok", file=sys.stderr)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default=_env_default("FORMAT", "table"),
    )
    p.add_argument("--out", default=_env_default("OUT", None))
    p.add_argument("--budget", type=int, default=_env_default("BUDGET", oracle.DEFAULT_BUDGET))
    p.add_argument("--jobs", type=int, default=_env_default("JOBS", 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hampair",
        description="Arc-disjoint Hamiltonian path pairs in two-generated "
        "abelian Cayley digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cuts", help="cut set, reflection distance, caps, gap graph")
    p.add_argument("k", type=int)
    p.add_argument("a", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("rays", help="lattice ray table for (k, a)")
    p.add_argument("k", type=int)
    p.add_argument("a", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("scan", help="sweep (k, a) cells and run consistency checks")
    p.add_argument("k_min", type=int)
    p.add_argument("k_max", type=int)
    p.add_argument(
        "--checks",
        nargs="*",
        choices=scan.ALL_CHECKS,
        help="subset of checks to run (default: all)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("build", help="construct and emit a witness file")
    bsub = p.add_subparsers(dest="family", required=True)
    b = bsub.add_parser("one", help="Cay(Z_k; a, a+1)")
    b.add_argument("params", type=int, nargs=2, metavar=("k", "a"))
    _add_common(b)
    b.set_defaults(func=cmd_build)
    b = bsub.add_parser("two", help="Cay(Z_{(2a+1)L}; -a, a+1)")
    b.add_argument("params", type=int, nargs=2, metavar=("a", "L"))
    _add_common(b)
    b.set_defaults(func=cmd_build)
    b = bsub.add_parser("product", help="C_m x C_n x C_l")
    b.add_argument("params", type=int, nargs=3, metavar=("m", "n", "l"))
    _add_common(b)
    b.set_defaults(func=cmd_build)
    b = bsub.add_parser("search", help="exhaustive search on any small digraph")
    b.add_argument("orders", type=_intlist)
    b.add_argument("gen_a", type=_intlist)
    b.add_argument("gen_b", type=_intlist)
    _add_common(b)
    b.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="re-verify a witness file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
