"""Command-line front end.

Exit codes: 0 success / YES / valid, 1 NO / invalid / disagreement,
2 input error, 3 oracle budget exhausted (crosscheck).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .census import graphs_up_to
from .characterize import decide
from .formats import ParseError, format_graph, parse_graph, to_graph6
from .graph import Graph
from .prism import complementary_prism, origin_comments
from .roles import (DEFAULT_BUDGET, AssignmentError, brute_force_solve, parse_assignment,
                    role_graph_alias, verify)
from .witness import NoAssignment, construct, parse_trace

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2, 3
NMAX_LIMIT = 8


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    path: str | None = None
    fmt: str | None = None
    nmax: int = 5
    budget: int = DEFAULT_BUDGET
    as_json: bool = False


def _read(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(cfg: RunConfig, stdin: TextIO) -> Graph:
    text = _read(cfg.path, stdin)
    try:
        return parse_graph(text, cfg.fmt)
    except ParseError as exc:
        raise InputError(f"malformed {cfg.fmt or 'graph'} input: {exc}") from exc


def run_decide(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    g = _load_graph(cfg, stdin)
    if g.n == 0:
        raise InputError("decide needs at least one vertex")
    report = decide(g)
    print(report.line(), file=out)
    if cfg.as_json:
        print(json.dumps(report.as_dict(), sort_keys=True), file=out)
    return EXIT_OK if report.has_assignment else EXIT_NO


def run_witness(cfg: RunConfig, out: TextIO, stdin: TextIO) -> int:
    g = _load_graph(cfg, stdin)
    if g.n == 0:
        raise InputError("witness needs at least one vertex")
    try:
        trace = construct(g, cfg.budget)
    except NoAssignment as exc:
        print(exc.report.line(), file=out)
        return EXIT_NO
    if cfg.as_json:
        record = {
            "lemma": trace.lemma, "side": trace.side, "fallback": trace.fallback,
            "path": list(trace.path),
            "params": {k: list(v) for k, v in trace.params.items()},
            "role_graph": [list(e) for e in trace.role_graph.edges()],
            "role_graph_alias": role_graph_alias(trace.role_graph),
            "roles": list(trace.assignment.roles),
        }
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        out.write(trace.format())
    return EXIT_OK


def run_verify(cfg: RunConfig, witness_path: str, out: TextIO, stdin: TextIO, direct: bool) -> int:
    g = _load_graph(cfg, stdin)
    text = _read(witness_path, stdin)
    try:
        if any(ln.split()[:1] == ["lemma"] for ln in text.splitlines()):
            trace = parse_trace(text)
            assignment, rg = trace.assignment, trace.role_graph
        else:
            assignment, rg = parse_assignment(text)
    except (AssignmentError, ValueError) as exc:
        raise InputError(f"malformed witness: {exc}") from exc
    target = g if direct else complementary_prism(g).graph
    verdict = verify(target, assignment, rg)
    if verdict:
        print("valid", file=out)
        return EXIT_OK
    print(f"invalid: {verdict.reason}", file=out)
    return EXIT_NO


def run_prism(cfg: RunConfig, out: TextIO, stdin: TextIO, to: str | None) -> int:
    g = _load_graph(cfg, stdin)
    if g.n == 0:
        raise InputError("prism needs at least one vertex")
    p = complementary_prism(g)
    fmt = to or cfg.fmt or "edgelist"
    out.write(format_graph(p.graph, fmt, origin_comments(p)))
    return EXIT_OK


def run_crosscheck(cfg: RunConfig, out: TextIO) -> int:
    if not 1 <= cfg.nmax <= NMAX_LIMIT:
        raise InputError(f"--nmax must be between 1 and {NMAX_LIMIT}")
    disagreements = fallbacks = unknowns = 0
    rows = []
    for g in graphs_up_to(cfg.nmax):
        report = decide(g)
        res = brute_force_solve(complementary_prism(g).graph, 3, cfg.budget)
        oracle = {"found": "YES", "none": "NO", "unknown": "unknown"}[res.status]
        mine = "YES" if report.has_assignment else "NO"
        if oracle == "unknown":
            unknowns += 1
            agree = "?"
        else:
            agree = "ok" if oracle == mine else "MISMATCH"
            disagreements += agree != "ok"
        if report.has_assignment:
            trace = construct(g, cfg.budget)
            lemma = trace.lemma
            fallbacks += trace.fallback
        else:
            lemma = f"cond{report.matched.condition}:{report.matched.side}"  # type: ignore[union-attr]
        rows.append({"n": g.n, "graph6": to_graph6(g), "decide": mine, "oracle": oracle,
                     "agree": agree, "lemma": lemma})
    summary = {"graphs": len(rows), "disagreements": disagreements,
               "fallbacks": fallbacks, "unknowns": unknowns}
    if cfg.as_json:
        print(json.dumps({"rows": rows, "summary": summary}, sort_keys=True), file=out)
    else:
        for r in rows:
            print(f"{r['n']}\t{r['graph6']}\t{r['decide']}\t{r['oracle']}\t{r['agree']}\t{r['lemma']}",
                  file=out)
        print(f"# graphs={len(rows)} disagreements={disagreements} "
              f"fallbacks={fallbacks} unknowns={unknowns}", file=out)
    if disagreements or fallbacks:
        return EXIT_NO
    if unknowns:
        return EXIT_UNKNOWN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismroles",
        description="3-role assignments of complementary prisms.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("graph6", "edgelist"),
                        help="input format (sniffed when omitted)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="oracle search nodes before giving up")
    common.add_argument("--json", dest="as_json", action="store_true",
                        help="emit a JSON record as well")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("decide", parents=[common], help="YES/NO verdict for the prism of G")
    p.add_argument("path", nargs="?", help="graph file (stdin when omitted)")
    p = sub.add_parser("witness", parents=[common], help="explicit verified assignment")
    p.add_argument("path", nargs="?")
    p = sub.add_parser("verify", parents=[common], help="check an assignment or witness file")
    p.add_argument("path", help="graph file")
    p.add_argument("witness", help="assignment or witness trace file ('-' for stdin)")
    p.add_argument("--direct", action="store_true",
                   help="check against G itself instead of its prism")
    p = sub.add_parser("prism", parents=[common], help="emit the complementary prism")
    p.add_argument("path", nargs="?")
    p.add_argument("--to", choices=("graph6", "edgelist"), help="output format")
    p = sub.add_parser("crosscheck", parents=[common],
                       help="compare decide with the exhaustive oracle on all small graphs")
    p.add_argument("--nmax", type=int, default=5, help=f"largest order (at most {NMAX_LIMIT})")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.subcommand, getattr(args, "path", None), args.fmt,
                    getattr(args, "nmax", 5), args.budget, args.as_json)
    if cfg.budget < 1:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        if cfg.subcommand == "decide":
            return run_decide(cfg, out, stdin)
        if cfg.subcommand == "witness":
            return run_witness(cfg, out, stdin)
        if cfg.subcommand == "verify":
            return run_verify(cfg, args.witness, out, stdin, args.direct)
        if cfg.subcommand == "prism":
            return run_prism(cfg, out, stdin, args.to)
        return run_crosscheck(cfg, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
