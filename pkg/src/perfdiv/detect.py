"""Induced-subgraph detection, hole search and class-membership predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError
from .graph import (
    Graph,
    bit,
    complement,
    cycle,
    bull,
    fork,
    graph_e,
    groetzsch,
    induced_subgraph,
    members,
    odd_torch,
    path,
    set_neighborhood,
    is_stable,
    vertex_set,
)


@dataclass(frozen=True)
class Witness:
    """``vertices[i]`` is the host vertex playing pattern vertex ``i``."""

    kind: str
    vertices: tuple[int, ...]

    @property
    def mask(self) -> int:
        return vertex_set(self.vertices)

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@lru_cache(maxsize=None)
def _search_order(pattern: Graph) -> tuple[int, ...]:
    # Most constrained first: highest degree, then most links back into the prefix.
    if pattern.n == 0:
        return ()
    degs = pattern.degrees()
    order = [max(range(pattern.n), key=lambda v: (degs[v], -v))]
    chosen = bit(order[0])
    while len(order) < pattern.n:
        rest = [v for v in range(pattern.n) if not chosen >> v & 1]
        v = max(rest, key=lambda u: ((pattern.adj[u] & chosen).bit_count(), degs[u], -u))
        order.append(v)
        chosen |= bit(v)
    return tuple(order)


def find_induced(g: Graph, pattern: Graph, kind: str = "pattern") -> Witness | None:
    """First induced copy of ``pattern`` in ``g`` in backtracking order, or None."""
    k = pattern.n
    if k > g.n:
        return None
    if k == 0:
        return Witness(kind, ())
    order = _search_order(pattern)
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    allv = g.vertices
    by_degree = {}
    for d in set(pdeg):
        by_degree[d] = vertex_set(v for v in range(g.n) if hdeg[v] >= d)
    # For each step, which earlier steps are pattern-adjacent.
    links = []
    for i, p in enumerate(order):
        links.append([(j, bool(pattern.adj[p] >> order[j] & 1)) for j in range(i)])
    image = [0] * k
    hadj = g.adj

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = allv & ~used & by_degree[pdeg[order[i]]]
        for j, adjacent in links[i]:
            if adjacent:
                cand &= hadj[image[j]]
            else:
                cand &= ~hadj[image[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            image[i] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        return False

    if not extend(0, 0):
        return None
    mapping = [0] * k
    for i, p in enumerate(order):
        mapping[p] = image[i]
    return Witness(kind, tuple(mapping))


def contains(g: Graph, pattern: Graph) -> bool:
    return find_induced(g, pattern) is not None


# ------------------------------------------------------------------ holes


def iter_holes(g: Graph, odd_only: bool = False, min_length: int = 4, max_length: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every hole once, in cycle order starting from its smallest vertex.

    Holes are grown as induced paths above their smallest vertex ``s``; a hole
    is reported from the direction whose second vertex is smaller than its last.
    """
    adj = g.adj
    n = g.n
    top = max_length if max_length is not None else n
    low = max(min_length, 5 if odd_only else 4)

    def grow(s: int, higher: int, path: list[int], pmask: int, interior: int):
        end = path[-1]
        cand = adj[end] & higher & ~pmask
        while cand:
            lowbit = cand & -cand
            cand ^= lowbit
            x = lowbit.bit_length() - 1
            ax = adj[x]
            if ax & interior:
                continue
            if ax >> s & 1:
                length = len(path) + 1
                if len(path) >= 3 and path[1] < x and length >= low and (not odd_only or length % 2):
                    yield tuple(path) + (x,)
                continue
            if len(path) + 1 < top:
                path.append(x)
                yield from grow(s, higher, path, pmask | lowbit, interior | (1 << end))
                path.pop()

    for s in range(n):
        higher = g.vertices & ~((2 << s) - 1)
        for p1 in members(adj[s] & higher):
            yield from grow(s, higher, [s, p1], (1 << s) | (1 << p1), 0)


def odd_holes(g: Graph) -> list[tuple[int, ...]]:
    """All odd holes, ordered lexicographically by sorted vertex set."""
    return sorted(iter_holes(g, odd_only=True), key=lambda h: (sorted(h), h))


def find_odd_hole(g: Graph, min_length: int = 5, max_length: int | None = None) -> Witness | None:
    for hole in iter_holes(g, odd_only=True, min_length=min_length, max_length=max_length):
        return Witness(f"C{len(hole)}", hole)
    return None


def find_odd_antihole(g: Graph, min_length: int = 5) -> Witness | None:
    hit = find_odd_hole(complement(g), min_length=min_length)
    if hit is None:
        return None
    return Witness(f"antihole{len(hit.vertices)}", hit.vertices)


def find_odd_antihole_ge7(g: Graph) -> Witness | None:
    """Odd antihole on at least 7 vertices; vertex order follows the complement cycle."""
    return find_odd_antihole(g, min_length=7)


def is_perfect(g: Graph) -> bool:
    return find_odd_hole(g) is None and find_odd_hole(complement(g)) is None


def imperfection_witness(g: Graph) -> Witness | None:
    return find_odd_hole(g) or find_odd_antihole(g)


def is_locally_perfect(g: Graph) -> bool:
    return all(is_perfect(induced_subgraph(g, g.adj[v])) for v in range(g.n))


# ------------------------------------------------------- named patterns

PATTERNS = {
    "bull": bull,
    "fork": fork,
    "E": graph_e,
    "F": groetzsch,
    "C3": lambda: cycle(3),
    "C4": lambda: cycle(4),
    "C5": lambda: cycle(5),
    "C7": lambda: cycle(7),
    "P4": lambda: path(4),
    "P5": lambda: path(5),
    "P6": lambda: path(6),
    "P7": lambda: path(7),
    "P8": lambda: path(8),
}


def pattern(name: str) -> Graph:
    try:
        return PATTERNS[name]()
    except KeyError:
        raise ValueError(f"unknown pattern {name!r}; known: {sorted(PATTERNS)}") from None


def find_pattern(g: Graph, name: str) -> Witness | None:
    return find_induced(g, pattern(name), kind=name)


def is_free(g: Graph, name: str) -> bool:
    return find_pattern(g, name) is None


def is_bull_free(g: Graph) -> bool:
    return is_free(g, "bull")


def is_Pk_free(g: Graph, k: int) -> bool:
    return find_induced(g, path(k)) is None


def is_P5_free(g: Graph) -> bool:
    return is_Pk_free(g, 5)


def is_P6_free(g: Graph) -> bool:
    return is_Pk_free(g, 6)


def is_P7_free(g: Graph) -> bool:
    return is_Pk_free(g, 7)


def is_P8_free(g: Graph) -> bool:
    return is_Pk_free(g, 8)


def is_C3_free(g: Graph) -> bool:
    adj = g.adj
    return not any(adj[v] & adj[u] for v in range(g.n) for u in members(adj[v]))


def is_C5_free(g: Graph) -> bool:
    return next(iter_holes(g, min_length=5, max_length=5), None) is None


def is_fork_free(g: Graph) -> bool:
    return is_free(g, "fork")


def is_E_free(g: Graph) -> bool:
    return is_free(g, "E")


def is_F_free(g: Graph) -> bool:
    return is_free(g, "F")


# ------------------------------------------------------------ odd torches


def find_odd_torch(g: Graph) -> Witness | None:
    """Odd torch as (hole in cycle order..., y, x), matching ``odd_torch`` labels."""
    adj = g.adj
    for hole in iter_holes(g, odd_only=True):
        k = len(hole)
        cmask = vertex_set(hole)
        pos = {v: i for i, v in enumerate(hole)}
        for y in members(set_neighborhood(g, cmask)):
            attach = adj[y] & cmask
            if not is_stable(g, attach):
                continue
            for x in members(adj[y] & ~cmask):
                if adj[x] & cmask:
                    continue
                verts = hole + (y, x)
                expected = odd_torch(k, [pos[u] for u in members(attach)])
                if induced_subgraph_in_order(g, verts) == expected:
                    return Witness("odd-torch", verts)
    return None


def is_odd_torch_free(g: Graph) -> bool:
    return find_odd_torch(g) is None


def induced_subgraph_in_order(g: Graph, verts: tuple[int, ...]) -> Graph:
    """Induced subgraph relabelled so that ``verts[i]`` becomes ``i``."""
    rows = []
    for v in verts:
        row = 0
        for i, u in enumerate(verts):
            if g.adj[v] >> u & 1:
                row |= 1 << i
        rows.append(row)
    return Graph(len(verts), tuple(rows))


# ---------------------------------------------------------- basic bull-free


def _hole_with_complete_and_anticomplete(g: Graph) -> tuple[tuple[int, ...], int, int] | None:
    adj = g.adj
    for hole in iter_holes(g, odd_only=True):
        cmask = vertex_set(hole)
        outside = g.vertices & ~cmask
        complete_v = next((u for u in members(outside) if adj[u] & cmask == cmask), None)
        if complete_v is None:
            continue
        anti_v = next((u for u in members(outside) if not adj[u] & cmask), None)
        if anti_v is not None:
            return hole, complete_v, anti_v
    return None


def basic_violation(g: Graph) -> dict | None:
    """Evidence that a bull-free graph is not basic, or None if it is basic."""
    for side, h in (("graph", g), ("complement", complement(g))):
        hit = _hole_with_complete_and_anticomplete(h)
        if hit is not None:
            hole, c, a = hit
            return {"side": side, "hole": list(hole), "complete": c, "anticomplete": a}
    return None


def is_basic_bullfree(g: Graph) -> bool:
    if not is_bull_free(g):
        raise DomainError("basic bull-free is only defined for bull-free graphs")
    return basic_violation(g) is None
