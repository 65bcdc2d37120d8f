"""Command-line interface.

Every invocation writes one JSON document to stdout::

    {"command": ..., "exact": true, "parameters": {...}, "result": {...}}

and a short human-readable summary to stderr. Exit status is 0 on success,
1 on usage or input errors and 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import geodesics, metric, noncrossing, verify
from .errors import MatchgeoError, ResourceLimit
from .geodesics import DEFAULT_CAP
from .matching import Matching, union_decompose

DEFAULT_MAX_M = 6
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def max_m() -> int:
    raw = os.environ.get("MATCHGEO_MAX_M")
    if raw is None:
        return DEFAULT_MAX_M
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"MATCHGEO_MAX_M must be an integer, got {raw!r}") from None


def _materialize_guard(m: int):
    limit = max_m()
    if m > limit:
        raise ResourceLimit(f"refusing to materialize the graph for m={m} "
                            f"(limit {limit}; set MATCHGEO_MAX_M to raise it)")


def _matching(text: str, flag: str, m: int | None) -> Matching:
    try:
        return Matching.parse(text, m)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _pair(args):
    a = _matching(args.a, "--a", args.m)
    b = _matching(args.b, "--b", args.m if args.m is not None else a.m)
    return a, b


def _decomposition(a, b):
    return [list(c.vertices) for c in union_decompose(a, b).cycles]


def cmd_dist(args):
    a, b = _pair(args)
    d = metric.distance(a, b)
    cycles = _decomposition(a, b)
    result = {"distance": d, "l": len(cycles), "cycles": cycles}
    return result, f"distance {d} ({len(cycles)} alternating cycles)"


def cmd_count(args):
    a, b = _pair(args)
    n = geodesics.count_from_profile(geodesics.cycle_profile(a, b))
    result = {
        "count": str(n),
        "distance": metric.distance(a, b),
        "profile": list(geodesics.cycle_profile(a, b)),
    }
    return result, f"{n} geodesics"


def cmd_enumerate(args):
    a, b = _pair(args)
    paths = [str(p) for p in geodesics.enumerate_geodesics(a, b, cap=args.cap)]
    result = {"count": str(len(paths)), "distance": metric.distance(a, b), "paths": paths}
    return result, f"{len(paths)} geodesics enumerated"


def cmd_antipodes(args):
    a = _matching(args.a, "--a", args.m)
    expected = metric.antipode_count(a.m)
    if args.count_only:
        return {"count": str(expected)}, f"{expected} antipodes"
    found = [str(x) for x in sorted(metric.antipodes_of(a))]
    return {"count": str(len(found)), "antipodes": found}, f"{len(found)} antipodes"


P2K_METHODS = {
    "recurrence": geodesics.p2k_recurrence,
    "weighted": geodesics.p2k_weighted,
    "closed": geodesics.p2k_closed,
    "trees": geodesics.labeled_tree_recurrence,
}


def cmd_p2k(args):
    if args.k < 1:
        raise UsageError("--k must be at least 1")
    value = P2K_METHODS[args.method](args.k)
    return {"value": str(value)}, f"P_{2 * args.k} = {value}"


def cmd_hurwitz(args):
    value = geodesics.count_cycle_factorizations(args.n)
    return {"count": str(value)}, f"{value} factorizations of the cycle (1 .. {args.n})"


def cmd_noncross_verify(args):
    _materialize_guard(args.m)
    report = noncrossing.verify_unique_maximal_pair(args.m)
    result = report.as_dict()
    result["noncrossing_count"] = len(list(noncrossing.enumerate_noncrossing(args.m)))
    result["catalan"] = noncrossing.catalan(args.m)
    passed = report.ok and result["noncrossing_count"] == result["catalan"]
    summary = "unique maximal pair confirmed" if passed else "uniqueness check FAILED"
    if not passed:
        pairs = report.maximal_pairs
        summary += f"; first counterexample: {pairs[0][0]} / {pairs[0][1]}" if pairs else ""
    return result, summary, passed


def cmd_noncross_count(args):
    a, b = _pair(args)
    n = noncrossing.mm_geodesic_count(a, b, cap=args.cap)
    result = {
        "count": str(n),
        "ambient_count": str(geodesics.geodesic_count(a, b)),
        "distance": noncrossing.mm_distance(a, b),
    }
    return result, f"{n} geodesics inside the non-crossing subgraph"


def cmd_verify_all(args):
    _materialize_guard(args.m)
    if args.m < 1:
        raise UsageError("--m must be at least 1")
    results = verify.run_all(args.m, seed=args.seed)
    passed = all(r.passed for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
    failed = [r for r in results if not r.passed]
    if failed:
        lines.append("first counterexample: " + " / ".join(failed[0].counterexample))
    return {"checks": [r.as_dict() for r in results], "passed": passed}, "\n".join(lines), passed


def cmd_export_dot(args):
    _materialize_guard(args.m)
    g = metric.matching_graph(args.m, noncrossing=args.noncrossing, cap=None)
    dot = g.to_dot()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dot)
    edges = sum(g.degree(i) for i in range(len(g))) // 2
    result = {"vertices": len(g), "edges": edges, "dot": dot}
    return result, f"{len(g)} vertices, {edges} edges"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matchgeo", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def pair_cmd(name, func, help, cap=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("--m", type=int)
        p.add_argument("--a", required=True, help="matching literal, e.g. 1-2,3-4")
        p.add_argument("--b", required=True)
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=func)
        return p

    pair_cmd("dist", cmd_dist, "distance and cycle decomposition")
    pair_cmd("count", cmd_count, "closed-form geodesic count")
    pair_cmd("enumerate", cmd_enumerate, "list every geodesic", cap=True)

    p = sub.add_parser("antipodes", help="antipodes of a matching")
    p.add_argument("--m", type=int)
    p.add_argument("--a", required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_antipodes)

    p = sub.add_parser("p2k", help="geodesics between matchings differing in one 2k-cycle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=sorted(P2K_METHODS), default="closed")
    p.set_defaults(func=cmd_p2k)

    p = sub.add_parser("hurwitz", help="brute-force count of n-cycle factorizations")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_hurwitz)

    nc = sub.add_parser("noncross", help="non-crossing subgraph")
    nc_sub = nc.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = nc_sub.add_parser("verify")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_noncross_verify)
    p = nc_sub.add_parser("count")
    p.add_argument("--m", type=int)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_noncross_count)

    vf = sub.add_parser("verify", help="run oracle checks")
    vf_sub = vf.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = vf_sub.add_parser("all")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("export-dot", help="write the graph in Graphviz DOT format")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--noncrossing", action="store_true")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export_dot)
    return parser


def _parameters(args) -> dict:
    skip = {"func", "command", "action", "verbose"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=stderr, format="%(name)s: %(message)s")
        out = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except MatchgeoError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    passed = True
    if len(out) == 3:
        result, summary, passed = out
    else:
        result, summary = out
    command = args.command if not getattr(args, "action", None) else f"{args.command} {args.action}"
    envelope = {
        "command": command,
        "parameters": _parameters(args),
        "result": result,
        "exact": True,
    }
    stdout.write(json.dumps(envelope, indent=2, sort_keys=True) + "\n")
    print(summary, file=stderr)
    return EXIT_OK if passed else EXIT_FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
