"""Command-line front end.

Exit codes: 0 success, 1 graph is not claw-free (certify, informational),
2 bad input or arguments, 3 oracle mismatch, 4 identity failure,
5 claw-free graph whose independence polynomial is not real-rooted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from multiprocessing import Pool
from pathlib import Path
from typing import Optional, Sequence

from .corpus import FILTERS, MODELS, CorpusExhausted, CorpusSpec, generate
from .gpoly import (GraphPolys, independence_poly_oracle, matching_poly_oracle)
from .graph import Graph
from .identities import ARITY, IDENTITIES, SCHEMA_VERSION, verify, verify_graph
from .io import GraphFormatError, parse_graph, render_graph6
from .roots import certify_claw_free

EXIT_OK = 0
EXIT_NOT_CLAW_FREE = 1
EXIT_INPUT = 2
EXIT_ORACLE = 3
EXIT_IDENTITY = 4
EXIT_NOT_REAL = 5


class InputError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _anchors(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"anchors must be integers like 0,3: {text!r}") from None


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(str(exc)) from None
    try:
        return parse_graph(text, fmt)
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(obj: dict):
    print(json.dumps(obj, indent=2))


def cmd_poly(args) -> int:
    g = _read_graph(args.input, args.format)
    engine = GraphPolys(g)
    p = engine.independence() if args.which == "independence" else engine.matching()
    oracle_ok = None
    if args.oracle:
        oracle = independence_poly_oracle if args.which == "independence" else matching_poly_oracle
        try:
            oracle_ok = oracle(g) == p
        except ValueError as exc:
            raise InputError(f"oracle unavailable: {exc}") from None
    if args.json:
        _emit({"schema": SCHEMA_VERSION, "which": args.which, "n": g.n, "m": g.m,
               "poly": str(p), "coefficients": list(p.coeffs), "oracle_match": oracle_ok})
    else:
        print(p)
    if oracle_ok is False:
        print("oracle mismatch", file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.input, args.format)
    anchors = args.anchors or ()
    if len(anchors) != ARITY[args.identity]:
        raise InputError(f"{args.identity} needs {ARITY[args.identity]} anchor(s), got {len(anchors)}")
    try:
        report = verify(g, args.identity, anchors, x=args.x)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(report.to_dict())
    return EXIT_OK if report.holds else EXIT_IDENTITY


def cmd_certify(args) -> int:
    g = _read_graph(args.input, args.format)
    result = certify_claw_free(g, intervals=args.intervals)
    _emit(result.to_dict())
    if not result.claw_free:
        return EXIT_NOT_CLAW_FREE
    return EXIT_OK if result.theorem_holds else EXIT_NOT_REAL


def _verify_job(job):
    gid, g, identities, timing = job
    t0 = time.perf_counter()
    reports = list(verify_graph(g, identities))
    elapsed = time.perf_counter() - t0
    cols = []
    for ident in identities:
        mine = [r for r in reports if r.identity_id == ident]
        cols.append(str(all(r.holds for r in mine)).lower())
    ok = all(r.holds for r in reports)
    row = [gid, str(g.n), str(g.m), render_graph6(g)] + cols + [str(len(reports))]
    if timing:
        row.append(f"{elapsed:.4f}")
    detail = {"schema": SCHEMA_VERSION, "id": gid, "graph6": render_graph6(g), "holds": ok,
              "reports": [r.to_dict() for r in reports]}
    return "\t".join(row), detail, EXIT_OK if ok else EXIT_IDENTITY


def _certify_job(job):
    gid, g, _identities, timing = job
    t0 = time.perf_counter()
    result = certify_claw_free(g)
    elapsed = time.perf_counter() - t0
    cert = result.cert
    row = [gid, str(g.n), str(g.m), render_graph6(g), str(result.claw_free).lower(),
           str(cert.all_real).lower(), str(cert.distinct_real_roots), str(cert.degree_squarefree),
           "" if result.theorem_holds is None else str(result.theorem_holds).lower()]
    if timing:
        row.append(f"{elapsed:.4f}")
    detail = dict(result.to_dict(), id=gid, graph6=render_graph6(g))
    code = EXIT_NOT_REAL if result.theorem_holds is False else EXIT_OK
    return "\t".join(row), detail, code


def run_corpus(spec: CorpusSpec, action: str, identities: Sequence[str] = IDENTITIES[:-1],
               workers: int = 1, out: Optional[Path] = None, timing: bool = False,
               stream=None) -> int:
    """Run an action over a corpus; writes the TSV summary and returns the exit code."""
    if action == "verify-all":
        header = ["id", "n", "m", "graph6"] + list(identities) + ["checks"]
        job_fn = _verify_job
    elif action == "certify-all":
        header = ["id", "n", "m", "graph6", "claw_free", "all_real", "distinct_real_roots",
                  "degree_squarefree", "theorem_holds"]
        job_fn = _certify_job
    else:
        raise ValueError(f"unknown action {action!r}")
    if timing:
        header.append("seconds")
    jobs = [(gid, g, tuple(identities), timing) for gid, g in generate(spec)]
    if workers > 1:
        with Pool(workers) as pool:
            results = list(pool.imap(job_fn, jobs, chunksize=4))
    else:
        results = [job_fn(j) for j in jobs]

    lines = ["\t".join(header)] + [row for row, _, _ in results]
    summary = "\n".join(lines) + "\n"
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.tsv").write_text(summary)
        gdir = out / "graphs"
        gdir.mkdir(exist_ok=True)
        for (gid, _, _, _), (_, detail, _) in zip(jobs, results):
            (gdir / f"{gid}.json").write_text(json.dumps(detail, indent=2) + "\n")
    if out is None or stream is not None:
        (stream or sys.stdout).write(summary)
    codes = {code for _, _, code in results}
    for bad in (EXIT_NOT_REAL, EXIT_IDENTITY):
        if bad in codes:
            return bad
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        spec = CorpusSpec(args.model, args.n, args.p, args.count, args.seed,
                          frozenset(args.filter or ()), args.max_draws)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    identities = args.identities or [i for i in IDENTITIES if i != "ms"]
    if "ms" in identities:
        raise InputError("ms is not available in corpus runs; use 'verify ms'")
    unknown = set(identities) - set(IDENTITIES)
    if unknown:
        raise InputError(f"unknown identities {sorted(unknown)}")
    out = Path(args.out) if args.out else None
    try:
        return run_corpus(spec, args.action, identities, args.workers, out, args.timing)
    except CorpusExhausted as exc:
        raise InputError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdpoly",
        description="Independence and matching polynomials, Christoffel-Darboux type "
                    "identities and real-rootedness certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    p = sub.add_parser("poly", help="print I(G,x) or mu(G,x)")
    add_input(p)
    p.add_argument("--which", choices=("independence", "matching"), default="independence")
    p.add_argument("--oracle", action="store_true", help="cross-check by brute force")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="check one identity on one graph")
    p.add_argument("identity", choices=IDENTITIES)
    add_input(p)
    p.add_argument("--anchors", type=_anchors, help="u or u,v")
    p.add_argument("--x", type=_fraction, default=Fraction(1), help="evaluation point for ms")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="claw test and Sturm certificate for I(G,x)")
    add_input(p)
    p.add_argument("--intervals", action="store_true", help="attach isolating intervals")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("corpus", help="batch verification over a generated corpus")
    p.add_argument("action", choices=("verify-all", "certify-all"))
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, required=True,
                   help="vertex count (gnp, bipartite), max vertices (exhaustive), "
                        "max edges (linegraphs)")
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", action="append", choices=FILTERS,
                   help="keep only matching graphs; random models redraw until --count pass")
    p.add_argument("--max-draws", type=int, help="give up after this many random draws")
    p.add_argument("--identities", type=lambda s: [t.strip().lower() for t in s.split(",")],
                   help="comma-separated subset of t1,t2,t3,c1a,c1b,m1,m2")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="directory for summary.tsv and per-graph JSON")
    p.add_argument("--timing", action="store_true", help="add a seconds column")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
