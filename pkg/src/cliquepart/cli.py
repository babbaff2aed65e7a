"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a checked property fails,
3 an enumeration stopped on its budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import constructions as C
from .enumeration import enumerate_maximal_strong
from .graph import emit_dot, emit_graph6, parse_graph6
from .partition import (
    count_clique_partitions,
    is_strongly_cp,
    strong_bound,
    weak_bound,
)
from .symmetry import automorphism_group, identify_group
from .verify import run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_TRUNCATED = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; 2 is reserved for property failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _read_graph(arg: str | None):
    text = sys.stdin.read() if arg in (None, "-") else arg
    lines = [ln for ln in text.split() if ln]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 string, got {len(lines)}")
    try:
        return parse_graph6(lines[0])
    except ValueError as exc:
        raise UsageError(f"cannot parse graph6: {exc}")


def _default_jobs() -> int:
    env = os.environ.get("CLIQUEPART_JOBS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# commands -----------------------------------------------------------------

def cmd_construct(args) -> int:
    fam = args.family
    try:
        if fam in ("gamma", "gamma-prime"):
            if args.n is None or args.v is None:
                raise UsageError(f"{fam} needs -n and -v")
            g = (C.gamma if fam == "gamma" else C.gamma_prime)(args.n, args.v)
            v = args.v
        elif fam == "turan":
            if args.N is None or args.r is None:
                raise UsageError("turan needs -N and -r")
            g, v = C.turan(args.N, args.r), None
        else:
            if args.m is None or args.s is None:
                raise UsageError("circulant needs -m and -s")
            g, v = C.circulant(args.m, C.symmetric_set(args.m, _ints(args.s))), None
    except ValueError as exc:
        raise UsageError(str(exc))
    out = emit_graph6(g) + "\n"
    if args.dot:
        out += emit_dot(g, v=v, name=fam.replace("-", "_"))
    _write(args.out, out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    n, v = args.n, args.v
    if g.order != n * v:
        raise UsageError(f"graph has {g.order} vertices, expected n*v = {n * v}")
    res = count_clique_partitions(g, v, limit=args.limit)
    strong, part = is_strongly_cp(g, n, v)
    weak = res.count == 1 and not res.truncated
    e = g.edge_count
    if strong:
        tag = "maximal" if e == strong_bound(n, v) else "not maximal"
        print(f"strong, {tag} ({e}/{strong_bound(n, v)} edges)")
    elif weak:
        tag = "maximal" if e == weak_bound(n, v) else "not maximal"
        print(f"weak, {tag} ({e}/{weak_bound(n, v)}), not strong")
    else:
        more = "+" if res.truncated else ""
        print(f"not weakly CP ({res.count}{more} partitions)")
    print(f"bounds: strong {strong_bound(n, v)}, weak {weak_bound(n, v)}, edges {e}")
    if weak:
        blocks = res.partitions[0].blocks
        print("partition: " + " | ".join(" ".join(map(str, b)) for b in blocks))
    return EXIT_OK if weak else EXIT_FAIL


def cmd_enumerate(args) -> int:
    try:
        rep = enumerate_maximal_strong(args.n, args.v, max_nodes=args.budget, max_seconds=args.time, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc))
    word = "graph" if rep.count == 1 else "graphs"
    suffix = "" if rep.complete else " (lower bound, budget exhausted)"
    print(f"{rep.count} {word}{suffix}")
    if args.out:
        base = Path(args.out)
        base.with_suffix(".txt").write_text(rep.to_text(), encoding="utf-8")
        base.with_suffix(".json").write_text(rep.to_json(), encoding="utf-8")
    else:
        for g6 in rep.graphs:
            print(g6)
    return EXIT_OK if rep.complete else EXIT_TRUNCATED


def cmd_aut(args) -> int:
    g = _read_graph(args.graph)
    grp = automorphism_group(g)
    print(f"order {grp.order}, {identify_group(grp)}")
    for p in grp.generators:
        print(f"  {p}")
    return EXIT_OK


def cmd_paper_verify(args) -> int:
    fixtures = args.fixtures or os.environ.get("CLIQUEPART_FIXTURES")
    rep = run_all(long=args.long, seed=args.seed, fixtures=fixtures)
    sys.stdout.write(rep.summary())
    if args.report:
        Path(args.report).write_text(rep.to_json(), encoding="utf-8")
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cliquepart", description="Clique-partitioned graph tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="emit a named graph as graph6")
    c.add_argument("family", choices=["gamma", "gamma-prime", "turan", "circulant"])
    c.add_argument("-n", type=int, help="number of cliques")
    c.add_argument("-v", type=int, help="clique size")
    c.add_argument("-N", type=int, help="Turán graph order")
    c.add_argument("-r", type=int, help="Turán graph part count")
    c.add_argument("-m", type=int, help="circulant order")
    c.add_argument("-s", help="circulant connection residues, e.g. 1,3,4 (closed under ±)")
    c.add_argument("--dot", action="store_true", help="append a DOT rendering")
    c.add_argument("--out", help="write to this file instead of stdout")
    c.set_defaults(func=cmd_construct)

    k = sub.add_parser("check", help="weak/strong status of a graph")
    k.add_argument("graph", nargs="?", help="graph6 string (default: stdin)")
    k.add_argument("-n", type=int, required=True)
    k.add_argument("-v", type=int, required=True)
    k.add_argument("--limit", type=int, default=None, help="stop counting partitions here")
    k.set_defaults(func=cmd_check)

    e = sub.add_parser("enumerate", help="maximal strongly partitioned graphs up to isomorphism")
    e.add_argument("-n", type=int, required=True)
    e.add_argument("-v", type=int, required=True)
    e.add_argument("--budget", type=int, default=None, help="search-node cap")
    e.add_argument("--time", type=float, default=None, help="wall-clock cap in seconds")
    e.add_argument("--jobs", type=int, default=_default_jobs())
    e.add_argument("--out", help="report path prefix; writes .txt and .json")
    e.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("aut", help="automorphism group order, tag and generators")
    a.add_argument("graph", nargs="?", help="graph6 string (default: stdin)")
    a.set_defaults(func=cmd_aut)

    v = sub.add_parser("paper-verify", help="run every reproduction check")
    v.add_argument("--long", action="store_true", help="include the slow enumeration counts")
    v.add_argument("--report", default="verification_report.json", help="JSON report path ('' to skip)")
    v.add_argument("--fixtures", help="fixture directory")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_paper_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cliquepart {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
