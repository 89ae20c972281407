"""Command-line entry point.

Exit codes: 0 no failures, 1 counterexample or failed certificate, 2 usage or
parse error. Graph inputs are files (or ``-`` for stdin) with one graph6
string per line; blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from ..coloring import chromatic_number, clique_number
from ..detect import (
    PATTERNS,
    basic_violation,
    find_odd_antihole,
    find_odd_hole,
    find_odd_torch,
    find_pattern,
    is_bull_free,
    is_locally_perfect,
    is_perfect,
)
from ..divide import (
    color_basic_p6bull,
    color_p6bull,
    find_nondivisible_subgraph,
    pd_coloring,
    pd_partition,
)
from ..errors import Graph6Error, PerfdivError
from ..formats import emit_dot, emit_graph6, parse_graph6
from ..graph import Graph, catalog, induced_subgraph, to_list
from .campaign import THEOREMS, get_theorem, run_campaign
from .enumerate import enumerate_graphs, enumerate_up_to, random_graphs
from .shrink import named_claim, shrink_counterexample


class UsageError(Exception):
    pass


def _read_graphs(spec: str) -> Iterator[Graph]:
    # bytes, so the graph6 parser reports non-ASCII input with its offset
    stream = getattr(sys.stdin, "buffer", sys.stdin) if spec == "-" else open(spec, "rb")
    try:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line or line[:1] in (b"#", "#"):
                continue
            try:
                yield parse_graph6(line)
            except Graph6Error as exc:
                raise UsageError(f"line {lineno}: {exc}") from None
    finally:
        if spec != "-":
            stream.close()


def _kv(text: str) -> dict[str, str]:
    out = {}
    for part in text.split(","):
        if not part:
            continue
        key, sep, value = part.partition("=")
        out[key.strip()] = value.strip() if sep else "true"
    return out


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_catalog(args) -> int:
    stable = [int(x) for x in args.stable.split(",")] if args.stable else []
    named = catalog(args.name, stable=stable)
    g = named.graph
    if args.emit == "g6":
        print(emit_graph6(g))
    elif args.emit == "dot":
        sys.stdout.write(emit_dot(g, name=args.name.replace(":", "_")))
    else:
        _emit({"name": named.name, "n": g.n, "m": g.m, "edges": g.edges(), "graph6": emit_graph6(g),
               "provenance": named.provenance})
    return 0


_SPECIAL_PATTERNS = {"odd-hole": find_odd_hole, "odd-antihole": find_odd_antihole, "odd-torch": find_odd_torch}


def cmd_detect(args) -> int:
    if args.pattern not in PATTERNS and args.pattern not in _SPECIAL_PATTERNS:
        raise UsageError(f"unknown pattern {args.pattern!r}; known: {sorted(PATTERNS) + sorted(_SPECIAL_PATTERNS)}")
    for g in _read_graphs(args.input):
        if args.pattern in _SPECIAL_PATTERNS:
            w = _SPECIAL_PATTERNS[args.pattern](g)
        else:
            w = find_pattern(g, args.pattern)
        _emit({"graph6": emit_graph6(g), "pattern": args.pattern, "witness": w.to_json() if w else None})
    return 0


def classify(g: Graph) -> dict:
    out: dict = {"graph6": emit_graph6(g), "n": g.n, "m": g.m}
    for name in ("bull", "fork", "E", "C3", "C5", "P5", "P6", "P7", "P8", "F"):
        out[f"{name}_free"] = find_pattern(g, name) is None
    out["odd_torch_free"] = find_odd_torch(g) is None
    out["perfect"] = is_perfect(g)
    out["locally_perfect"] = is_locally_perfect(g)
    out["basic_bullfree"] = basic_violation(g) is None if out["bull_free"] else None
    out["omega"] = clique_number(g)[0]
    out["chi"] = chromatic_number(g)[0]
    return out


def cmd_classify(args) -> int:
    for g in _read_graphs(args.input):
        _emit(classify(g))
    return 0


def cmd_check_pd(args) -> int:
    status = 0
    for g in _read_graphs(args.input):
        bad = find_nondivisible_subgraph(g)
        row: dict = {"graph6": emit_graph6(g), "perfectly_divisible": bad is None}
        if g.n:
            cert = pd_partition(g)
            row["certificate"] = cert.to_json() if cert else None
        if bad is not None:
            status = 1
            row["counterexample"] = {"vertices": to_list(bad), "graph6": emit_graph6(induced_subgraph(g, bad))}
        _emit(row)
    return status


def cmd_color(args) -> int:
    status = 0
    for g in _read_graphs(args.input):
        row: dict = {"graph6": emit_graph6(g), "method": args.method}
        try:
            if args.method == "exact":
                cert = chromatic_number(g)[1]
            elif args.method == "pd":
                cert = pd_coloring(g)
            elif args.method == "basic":
                cert = color_basic_p6bull(g, fallback=args.fallback_bruteforce)
            else:
                cert = color_p6bull(g)
        except PerfdivError as exc:
            status = 1
            row["error"] = f"{type(exc).__name__}: {exc}"
            print(f"{emit_graph6(g)}: {type(exc).__name__}: {exc}", file=sys.stderr)
        else:
            row.update(cert.to_json())
            row["omega"] = clique_number(g)[0]
        _emit(row)
    return status


def _source(args, theorem) -> tuple[list[Graph], str]:
    if args.input:
        return list(_read_graphs(args.input)), f"input:{args.input}"
    opts = _kv(args.gen)
    if "n" not in opts:
        raise UsageError("--gen needs n=<k>")
    n = int(opts["n"])
    connected = opts.get("connected") == "true" or theorem.needs_connected
    keep = None if args.no_prune else theorem.prune()
    graphs = list(enumerate_up_to(n, connected, keep))
    label = f"enumerate:n<={n}" + (",connected" if connected else "") + (",class-pruned" if keep else "")
    return graphs, label


def cmd_verify(args) -> int:
    if args.list:
        for t in THEOREMS.values():
            print(f"{t.id}\t{t.statement}")
        return 0
    if not args.theorem or bool(args.gen) == bool(args.input):
        raise UsageError("verify needs --theorem and exactly one of --gen / --input")
    try:
        theorem = get_theorem(args.theorem)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    graphs, label = _source(args, theorem)
    report = run_campaign(theorem, graphs, label=label, jobs=args.jobs)
    text = report.to_json_lines(include_skipped=not args.hits_only)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(report.summary())
    else:
        sys.stdout.write(text)
    return 1 if report.failures else 0


def cmd_shrink(args) -> int:
    try:
        claim = named_claim(args.claim)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    status = 0
    for g in _read_graphs(args.input):
        if claim(g):
            print(f"{emit_graph6(g)}: claim {args.claim} holds; nothing to shrink", file=sys.stderr)
            _emit({"graph6": emit_graph6(g), "claim": args.claim, "holds": True})
            continue
        small = shrink_counterexample(g, claim)
        status = 1
        _emit({"graph6": emit_graph6(g), "claim": args.claim, "holds": False, "shrunk": emit_graph6(small), "n": small.n})
    return status


def cmd_gen(args) -> int:
    if args.random:
        opts = _kv(args.random)
        try:
            stream = random_graphs(args.n, float(opts["p"]), int(opts.get("seed", 0)), int(opts.get("count", 1)))
        except KeyError:
            raise UsageError("--random needs p=<p>[,seed=<s>,count=<c>]") from None
    elif args.up_to:
        stream = enumerate_up_to(args.n, args.connected)
    else:
        stream = enumerate_graphs(args.n, args.connected)
    for g in stream:
        print(emit_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfdiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a named graph")
    p.add_argument("--name", required=True)
    p.add_argument("--stable", help="comma-separated hole positions for torch<k>")
    p.add_argument("--emit", choices=("g6", "dot", "json"), default="g6")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("detect", help="find an induced pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("classify", help="evaluate every class predicate")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-pd", help="perfect divisibility with certificate or counterexample")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check_pd)

    p = sub.add_parser("color", help="colour with a certificate")
    p.add_argument("--method", choices=("exact", "pd", "basic", "p6bull"), default="exact")
    p.add_argument("--input", required=True)
    p.add_argument("--fallback-bruteforce", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="run a theorem campaign")
    p.add_argument("--theorem")
    p.add_argument("--gen", help="n=<k>[,connected]: all graphs with at most k vertices")
    p.add_argument("--input")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-prune", action="store_true", help="enumerate all graphs, not just the theorem's class")
    p.add_argument("--hits-only", action="store_true", help="omit verdict lines for filtered-out graphs")
    p.add_argument("--out", help="write the JSON-lines report here and print only the summary")
    p.add_argument("--list", action="store_true", help="list theorem ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("shrink", help="shrink counterexamples to vertex-minimal ones")
    p.add_argument("--claim", required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_shrink)

    p = sub.add_parser("gen", help="generate graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--up-to", action="store_true", help="all sizes 1..n")
    p.add_argument("--random", help="p=<p>,seed=<s>,count=<c>")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (UsageError, PerfdivError, ValueError, OSError) as exc:
        print(f"perfdiv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
