"""Theorem campaigns: filter a graph stream, evaluate a claim, collect counterexamples."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from ..coloring import chromatic_number, clique_number
from ..decompose import (
    find_homogeneous_set,
    homogeneous_set_from_5hole,
    homogeneous_set_from_7hole,
    is_homogeneous_set,
    short_hole_in,
)
from ..detect import (
    basic_violation,
    find_odd_antihole_ge7,
    imperfection_witness,
    is_bull_free,
    is_C3_free,
    is_C5_free,
    is_F_free,
    is_locally_perfect,
    is_odd_torch_free,
    is_P6_free,
    is_P8_free,
    is_perfect,
)
from ..coloring import has_clique
from ..divide import (
    color_basic_p6bull,
    color_p6bull,
    find_nondivisible_subgraph,
    pd_coloring,
    two_perfect_partition,
)
from ..errors import NotPerfectlyDivisibleError, PerfdivError, StructureViolation
from ..formats import emit_graph6, parse_graph6
from ..graph import Graph, delete_vertices, induced_subgraph, is_connected, non_neighborhood, to_list

Check = Callable[[Graph], "dict | None"]


@dataclass(frozen=True)
class Filter:
    name: str
    test: Callable[[Graph], bool]
    hereditary: bool = True


@dataclass(frozen=True)
class TheoremSpec:
    """A class filter (cheap tests first) and a claim returning None or failure details."""

    id: str
    statement: str
    filters: tuple[Filter, ...]
    claim: Check

    def admits(self, g: Graph) -> bool:
        return all(f.test(g) for f in self.filters)

    def holds(self, g: Graph) -> bool:
        """False exactly when ``g`` is in the class and the claim fails."""
        return not self.admits(g) or self.claim(g) is None

    @property
    def needs_connected(self) -> bool:
        return any(f.name == "connected" for f in self.filters)

    def prune(self) -> Callable[[Graph], bool] | None:
        """Conjunction of the hereditary filters, for class-restricted enumeration."""
        return _PRUNERS.get(self.id)


# ------------------------------------------------------------ predicates

CONNECTED = Filter("connected", is_connected, hereditary=False)
BULL = Filter("bull-free", is_bull_free)
C3 = Filter("C3-free", is_C3_free)
C5 = Filter("C5-free", is_C5_free)
P6 = Filter("P6-free", is_P6_free)
P8 = Filter("P8-free", is_P8_free)
TORCH = Filter("odd-torch-free", is_odd_torch_free)
LOCAL = Filter("locally-perfect", is_locally_perfect)
BASIC = Filter("basic", lambda g: basic_violation(g) is None)
OMEGA3 = Filter("omega>=3", lambda g: clique_number(g)[0] >= 3, hereditary=False)


def _is_min_nonpd(g: Graph) -> bool:
    if g.n == 0 or find_nondivisible_subgraph(g) is None:
        return False
    return all(find_nondivisible_subgraph(delete_vertices(g, 1 << v)) is None for v in range(g.n))


MIN_NONPD = Filter("vertex-minimal-non-PD", _is_min_nonpd, hereditary=False)


def _in_corollary_class(g: Graph) -> bool:
    if is_odd_torch_free(g):
        return True
    if is_C5_free(g) and is_P8_free(g):
        return True
    return is_P6_free(g) and is_F_free(g)


COROLLARY_CLASS = Filter("odd-torch|P8C5|P6F-free", _in_corollary_class, hereditary=False)


# ---------------------------------------------------------------- claims


def claim_pd(g: Graph) -> dict | None:
    s = find_nondivisible_subgraph(g)
    if s is None:
        return None
    return {"nondivisible_subgraph": to_list(s), "subgraph_g6": emit_graph6(induced_subgraph(g, s))}


def _claim_pd_iff_f_free(g: Graph) -> dict | None:
    pd = find_nondivisible_subgraph(g) is None
    f_free = is_F_free(g)
    if pd == f_free:
        return None
    return {"perfectly_divisible": pd, "F_free": f_free}


def _claim_pd_coloring(g: Graph) -> dict | None:
    try:
        cert = pd_coloring(g)
    except NotPerfectlyDivisibleError as exc:
        return {"not_perfectly_divisible": list(exc.vertices)}
    omega = clique_number(g)[0]
    bound = comb(omega + 1, 2)
    if not cert.is_proper(g) or cert.palette > bound:
        return {"palette": cert.palette, "bound": bound, "proper": cert.is_proper(g)}
    return None


def _chi_at_most(k: int) -> Check:
    def check(g: Graph) -> dict | None:
        chi, cert = chromatic_number(g)
        return None if chi <= k else {"chi": chi, "coloring": list(cert.colors)}

    return check


def _claim_p6c3(g: Graph) -> dict | None:
    chi, _ = chromatic_number(g)
    if chi > 4:
        return {"chi": chi}
    if chi == 4 and is_F_free(g):
        return {"chi": 4, "F_free": True}
    return None


def _split_vertex(g: Graph, v: int) -> bool:
    return is_perfect(induced_subgraph(g, g.adj[v])) or is_perfect(induced_subgraph(g, non_neighborhood(g, v)))


def _claim_bullfree(g: Graph) -> dict | None:
    if find_homogeneous_set(g) is not None:
        return None
    bad = [v for v in range(g.n) if not _split_vertex(g, v)]
    return {"vertices_with_both_sides_imperfect": bad} if bad else None


def _claim_basic_split(g: Graph) -> dict | None:
    bad = [v for v in range(g.n) if not _split_vertex(g, v)]
    return {"vertices_with_both_sides_imperfect": bad} if bad else None


def _claim_no_big_antihole(g: Graph) -> dict | None:
    for v in range(g.n):
        m = non_neighborhood(g, v)
        hit = find_odd_antihole_ge7(induced_subgraph(g, m))
        if hit is not None:
            order = to_list(m)
            return {"vertex": v, "antihole": [order[i] for i in hit.vertices]}
    return None


def _claim_mnpd(g: Graph) -> dict | None:
    problems = {}
    if not is_connected(g):
        problems["connected"] = False
    if not is_locally_perfect(g):
        problems["locally_perfect"] = False
    perfect_m = [v for v in range(g.n) if is_perfect(induced_subgraph(g, non_neighborhood(g, v)))]
    if perfect_m:
        problems["vertices_with_perfect_M"] = perfect_m
    return problems or None


def _claim_no_homogeneous_set(g: Graph) -> dict | None:
    s = find_homogeneous_set(g)
    return None if s is None else {"homogeneous_set": to_list(s)}


def _hole_anchors(g: Graph, length: int):
    """Pairs (v, hole) with v in a maximum clique and a ``length``-hole inside M(v)."""
    omega = clique_number(g)[0]
    for v in range(g.n):
        if not has_clique(g.adj, g.adj[v], omega - 1):
            continue
        hole = short_hole_in(g, non_neighborhood(g, v), length)
        if hole is not None:
            yield v, hole


def _module_exists_claim(length: int) -> Check:
    def check(g: Graph) -> dict | None:
        for v, hole in _hole_anchors(g, length):
            if find_homogeneous_set(g) is None:
                return {"vertex": v, "hole": list(hole.vertices), "homogeneous_set": None}
            return None
        return None

    return check


def _module_construction_claim(length: int, build) -> Check:
    def check(g: Graph) -> dict | None:
        for v, hole in _hole_anchors(g, length):
            try:
                s = build(g, v, hole)
            except StructureViolation as exc:
                return {"vertex": v, "hole": list(hole.vertices), "violation": exc.claim, "vertices": list(exc.vertices)}
            if not is_homogeneous_set(g, s):
                return {"vertex": v, "hole": list(hole.vertices), "not_homogeneous": to_list(s)}
        return None

    return check


def _claim_two_perfect(g: Graph) -> dict | None:
    cert = two_perfect_partition(g, check=False)
    problems = cert.violations(g)
    return {"certificate": cert.to_json(), "problems": problems} if problems else None


def _claim_basic_bound(g: Graph) -> dict | None:
    cert = color_basic_p6bull(g, check=False)
    omega = clique_number(g)[0]
    if not cert.is_proper(g) or cert.palette > omega ** 2:
        return {"palette": cert.palette, "omega": omega}
    return None


def _claim_general_bound(g: Graph) -> dict | None:
    cert = color_p6bull(g)
    omega = clique_number(g)[0]
    if not cert.is_proper(g) or cert.palette > omega ** 7:
        return {"palette": cert.palette, "omega": omega}
    return None


def _claim_perfect(g: Graph) -> dict | None:
    w = imperfection_witness(g)
    return None if w is None else {"witness": w.to_json()}


THEOREMS: dict[str, TheoremSpec] = {
    t.id: t
    for t in (
        TheoremSpec("thm-odd-torch-pd", "(odd torch, bull)-free => perfectly divisible", (BULL, TORCH), claim_pd),
        TheoremSpec("thm-P8C5-pd", "(P8, C5, bull)-free => perfectly divisible", (C5, BULL, P8), claim_pd),
        TheoremSpec("thm-P6-iff-F", "(P6, bull)-free: perfectly divisible <=> F-free", (BULL, P6), _claim_pd_iff_f_free),
        TheoremSpec(
            "cor-chromatic",
            "bull-free and (odd torch | {P8,C5} | {P6,F})-free => chi <= C(omega+1, 2)",
            (BULL, COROLLARY_CLASS),
            _claim_pd_coloring,
        ),
        TheoremSpec("cor-co2", "(odd torch, C3)-free => chi <= 3", (C3, TORCH), _chi_at_most(3)),
        TheoremSpec("lem-P6C3", "(P6, C3)-free => chi <= 4, and chi = 4 => contains F", (C3, P6), _claim_p6c3),
        TheoremSpec("lem-P8C3", "(P8, C5, C3)-free => chi <= 3", (C3, C5, P8), _chi_at_most(3)),
        TheoremSpec(
            "lem-bullfree",
            "bull-free => homogeneous set, or every v has N(v) or M(v) perfect",
            (BULL,),
            _claim_bullfree,
        ),
        TheoremSpec("lem-bull2", "basic bull-free => every v has N(v) or M(v) perfect", (BULL, BASIC), _claim_basic_split),
        TheoremSpec(
            "lem-oddantihole",
            "connected locally perfect bull-free => no odd antihole on >= 7 vertices in any M(v)",
            (CONNECTED, BULL, LOCAL),
            _claim_no_big_antihole,
        ),
        TheoremSpec(
            "lem-MNPD",
            "vertex-minimal non-PD bull-free => connected, locally perfect, every M(v) imperfect",
            (BULL, MIN_NONPD),
            _claim_mnpd,
        ),
        TheoremSpec(
            "lem-homogeneous", "vertex-minimal non-PD => no homogeneous set", (MIN_NONPD,), _claim_no_homogeneous_set
        ),
        TheoremSpec(
            "lem-L1",
            "connected locally perfect (P6, bull)-free, omega >= 3, 5-hole in M(v) => homogeneous set",
            (CONNECTED, OMEGA3, BULL, P6, LOCAL),
            _module_exists_claim(5),
        ),
        TheoremSpec(
            "lem-L1-construction",
            "same class as lem-L1: N(v) inside Y and its edge component is a homogeneous set, for every such v",
            (CONNECTED, OMEGA3, BULL, P6, LOCAL),
            _module_construction_claim(5, homogeneous_set_from_5hole),
        ),
        TheoremSpec(
            "lem-L2",
            "connected locally perfect (P8, C5, bull)-free, omega >= 3, 7-hole in M(v) => homogeneous set",
            (CONNECTED, OMEGA3, C5, BULL, P8, LOCAL),
            _module_exists_claim(7),
        ),
        TheoremSpec(
            "lem-L2-construction",
            "same class as lem-L2: N(v) inside Y and its edge component is a homogeneous set, for every such v",
            (CONNECTED, OMEGA3, C5, BULL, P8, LOCAL),
            _module_construction_claim(7, homogeneous_set_from_7hole),
        ),
        TheoremSpec(
            "lem-bull5",
            "locally perfect (P6, bull)-free => partition into two perfect induced subgraphs",
            (BULL, P6, LOCAL),
            _claim_two_perfect,
        ),
        TheoremSpec("lem-bull6", "basic (P6, bull)-free => chi <= omega^2", (BULL, P6, BASIC), _claim_basic_bound),
        TheoremSpec("thm-bound", "(P6, bull)-free => chi <= omega^7", (BULL, P6), _claim_general_bound),
        TheoremSpec("sanity-all-perfect", "every graph is perfect (deliberately false)", (), _claim_perfect),
    )
}


def _conj(*filters: Filter) -> Callable[[Graph], bool]:
    tests = tuple(f.test for f in filters)

    def keep(g: Graph) -> bool:
        return all(t(g) for t in tests)

    keep.__name__ = "keep_" + "_".join(f.name for f in filters)
    return keep


# One shared object per hereditary class so enumeration caches are reused.
_BULL_P6 = _conj(BULL, P6)
_PRUNERS: dict[str, Callable[[Graph], bool]] = {
    "thm-odd-torch-pd": _conj(BULL, TORCH),
    "thm-P8C5-pd": _conj(C5, BULL, P8),
    "thm-P6-iff-F": _BULL_P6,
    "cor-co2": _conj(C3, TORCH),
    "lem-P6C3": _conj(C3, P6),
    "lem-P8C3": _conj(C3, C5, P8),
    "lem-bullfree": _conj(BULL),
    "lem-bull2": _conj(BULL, BASIC),
    "lem-bull5": _conj(BULL, P6, LOCAL),
    "lem-bull6": _conj(BULL, P6, BASIC),
    "thm-bound": _BULL_P6,
    "lem-oddantihole": _conj(BULL, LOCAL),
    "lem-MNPD": _conj(BULL),
    "lem-L1": _conj(BULL, P6, LOCAL),
    "lem-L2": _conj(C5, BULL, P8, LOCAL),
    "lem-L1-construction": _conj(BULL, P6, LOCAL),
    "lem-L2-construction": _conj(C5, BULL, P8, LOCAL),
}


def get_theorem(theorem_id: str) -> TheoremSpec:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {sorted(THEOREMS)}") from None


# ---------------------------------------------------------------- running


@dataclass
class CampaignReport:
    theorem: str
    source: str
    scanned: int = 0
    filter_hits: int = 0
    passes: int = 0
    failures: int = 0
    errors: int = 0
    structure_violations: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    verdicts: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def summary(self) -> dict:
        return {
            "summary": True,
            "theorem": self.theorem,
            "statement": get_theorem(self.theorem).statement,
            "source": self.source,
            "scanned": self.scanned,
            "filter_hits": self.filter_hits,
            "passes": self.passes,
            "failures": self.failures,
            "errors": self.errors,
            "structure_violations": self.structure_violations,
            "counterexamples": self.counterexamples,
            "wall_time": round(self.wall_time, 3),
        }

    def to_json_lines(self, include_skipped: bool = True) -> str:
        lines = [
            json.dumps(v, sort_keys=True)
            for v in self.verdicts
            if include_skipped or v["status"] != "skip"
        ]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines) + "\n"


def evaluate(theorem_id: str, g: Graph) -> dict:
    """Verdict for one graph: status is ``skip``, ``pass``, ``fail`` or ``error``."""
    spec = get_theorem(theorem_id)
    verdict: dict = {"graph6": emit_graph6(g), "n": g.n}
    try:
        for f in spec.filters:
            if not f.test(g):
                verdict["status"] = "skip"
                verdict["filtered_by"] = f.name
                return verdict
        detail = spec.claim(g)
    except PerfdivError as exc:
        verdict["status"] = "error"
        verdict["error"] = f"{type(exc).__name__}: {exc}"
        return verdict
    if detail is None:
        verdict["status"] = "pass"
    else:
        verdict["status"] = "fail"
        verdict["detail"] = detail
    return verdict


def _evaluate_g6(args: tuple[str, str]) -> dict:
    theorem_id, g6 = args
    return evaluate(theorem_id, parse_graph6(g6))


def run_campaign(spec: TheoremSpec | str, source: Iterable[Graph], label: str = "stream", jobs: int = 1) -> CampaignReport:
    """Apply the filter and claim to every graph; errors count as failures and the run continues."""
    if isinstance(spec, str):
        spec = get_theorem(spec)
    start = time.perf_counter()
    report = CampaignReport(spec.id, label)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            verdicts = list(pool.map(_evaluate_g6, ((spec.id, emit_graph6(g)) for g in source), chunksize=64))
    else:
        verdicts = [evaluate(spec.id, g) for g in source]
    for v in verdicts:
        report.scanned += 1
        status = v["status"]
        if status == "skip":
            continue
        report.filter_hits += 1
        if status == "pass":
            report.passes += 1
            continue
        report.failures += 1
        if isinstance(v.get("detail"), dict) and "violation" in v["detail"]:
            report.structure_violations += 1
        if status == "error":
            report.errors += 1
            if v["error"].startswith(StructureViolation.__name__):
                report.structure_violations += 1
        report.counterexamples.append({k: v[k] for k in v if k in ("graph6", "detail", "error")})
    report.verdicts = verdicts
    report.wall_time = time.perf_counter() - start
    return report


def replay(report: CampaignReport) -> list[str]:
    """Graph6 strings of stored counterexamples that no longer fail (should be empty)."""
    stale = []
    for ce in report.counterexamples:
        if evaluate(report.theorem, parse_graph6(ce["graph6"]))["status"] not in ("fail", "error"):
            stale.append(ce["graph6"])
    return stale
