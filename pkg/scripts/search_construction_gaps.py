"""Look for graphs where the hole-based module constructions break down.

Scans locally perfect (P6, bull)-free graphs (exhaustive up to --n, then
random samples) and reports:
  * graphs where some maximum-clique vertex defeats the 5-hole or 7-hole
    construction although a homogeneous set exists;
  * graphs where the two-perfect partition had to contract a module.
"""

import argparse
import json

import perfdiv.divide as divide
from perfdiv.detect import is_bull_free, is_locally_perfect, is_P6_free
from perfdiv.errors import StructureViolation
from perfdiv.formats import emit_graph6
from perfdiv.harness import enumerate_up_to, get_theorem, random_graphs
from perfdiv.harness.campaign import evaluate


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=8, help="exhaustive part covers n <= this")
    p.add_argument("--random-n", type=int, nargs="*", default=[9, 10, 11])
    p.add_argument("--samples", type=int, default=300, help="random graphs per size")
    p.add_argument("--p", type=float, default=0.45)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    contracted = []
    original = divide._module_via_hole

    def spy(g, s, v):
        out = original(g, s, v)
        contracted.append(emit_graph6(g))
        return out

    divide._module_via_hole = spy

    def graphs():
        yield from enumerate_up_to(args.n, keep=get_theorem("lem-bull5").prune())
        for n in args.random_n:
            for g in random_graphs(n, args.p, args.seed + n, args.samples):
                if is_bull_free(g) and is_P6_free(g) and is_locally_perfect(g):
                    yield g

    scanned = gaps = violations = 0
    for g in graphs():
        scanned += 1
        for tid in ("lem-L1-construction", "lem-L2-construction"):
            v = evaluate(tid, g)
            if v["status"] == "fail":
                gaps += 1
                print(json.dumps({"theorem": tid, "graph6": v["graph6"], "detail": v.get("detail")}))
        try:
            divide.two_perfect_partition(g, check=True)
        except StructureViolation as exc:
            violations += 1
            print(json.dumps({"two_perfect_violation": emit_graph6(g), "claim": exc.claim}))
    print(json.dumps({"scanned": scanned, "construction_gaps": gaps, "two_perfect_violations": violations,
                      "contractions": len(contracted), "contracted": contracted[:10]}))
    return 1 if violations else 0


if __name__ == "__main__":
    raise SystemExit(main())
