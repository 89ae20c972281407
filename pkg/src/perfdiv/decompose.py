"""Homogeneous sets, modular decomposition and the hole-based module constructions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import clique_number, has_clique
from .detect import (
    Witness,
    find_odd_hole,
    induced_subgraph_in_order,
    is_bull_free,
    is_C5_free,
    is_locally_perfect,
    is_P6_free,
    is_P8_free,
)
from .errors import PreconditionError, StructureViolation
from .formats import emit_graph6
from .graph import (
    Graph,
    VertexSet,
    complement,
    complete,
    components,
    cycle,
    empty,
    induced_subgraph,
    is_connected,
    lowest,
    members,
    non_neighborhood,
    set_neighborhood,
    substitute,
    to_list,
    vertex_set,
)


def is_homogeneous_set(g: Graph, s: VertexSet) -> bool:
    k = s.bit_count()
    if not 1 < k < g.n or s & ~g.vertices:
        return False
    for u in members(g.vertices & ~s):
        inside = g.adj[u] & s
        if inside and inside != s:
            return False
    return True


def module_closure(g: Graph, s: VertexSet) -> VertexSet:
    """Smallest module containing ``s``: keep absorbing vertices that split it."""
    while True:
        splitters = 0
        for u in members(g.vertices & ~s):
            inside = g.adj[u] & s
            if inside and inside != s:
                splitters |= 1 << u
        if not splitters:
            return s
        s |= splitters


def find_homogeneous_set(g: Graph) -> VertexSet | None:
    """First pair (in lexicographic order) whose module closure is proper."""
    full = g.vertices
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = module_closure(g, (1 << u) | (1 << v))
            if c != full:
                return c
    return None


# ------------------------------------------------------------ modular tree


@dataclass(frozen=True)
class ModularTree:
    """Substitution tree over original vertex labels.

    ``kind`` is ``leaf``, ``series`` (complete quotient), ``parallel``
    (edgeless quotient) or ``prime``. Quotient vertex ``i`` stands for
    ``children[i]``; children are ordered by smallest vertex.
    """

    kind: str
    vertices: VertexSet
    quotient: Graph
    children: tuple["ModularTree", ...] = field(default=())

    def leaves(self) -> list[int]:
        return to_list(self.vertices)

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertices": to_list(self.vertices), "quotient": emit_graph6(self.quotient)}
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out


def _maximal_modules(g: Graph, s: VertexSet) -> list[VertexSet]:
    # g[s] and its complement are connected, so the maximal proper modules partition s.
    h = induced_subgraph(g, s)
    verts = to_list(s)
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(h.n):
        for v in range(u + 1, h.n):
            if find(u) != find(v) and module_closure(h, (1 << u) | (1 << v)) != h.vertices:
                parent[find(v)] = find(u)
    groups: dict[int, VertexSet] = {}
    for i in range(h.n):
        groups[find(i)] = groups.get(find(i), 0) | (1 << verts[i])
    return sorted(groups.values(), key=lowest)


def modular_decompose(g: Graph, within: VertexSet | None = None) -> ModularTree:
    s = g.vertices if within is None else within
    if not s:
        raise PreconditionError("modular decomposition needs at least one vertex")
    if s.bit_count() == 1:
        return ModularTree("leaf", s, complete(1))
    comps = components(g, s)
    if len(comps) > 1:
        kids = tuple(modular_decompose(g, c) for c in comps)
        return ModularTree("parallel", s, empty(len(kids)), kids)
    co = components(complement(g), s)
    if len(co) > 1:
        kids = tuple(modular_decompose(g, c) for c in co)
        return ModularTree("series", s, complete(len(kids)), kids)
    parts = _maximal_modules(g, s)
    reps = tuple(lowest(p) for p in parts)
    quotient = induced_subgraph_in_order(g, reps)
    kids = tuple(modular_decompose(g, p) for p in parts)
    return ModularTree("prime", s, quotient, kids)


def expand(tree: ModularTree) -> Graph:
    """Rebuild a graph from the tree by substituting children into quotients."""
    if tree.kind == "leaf":
        return complete(1)
    g = tree.quotient
    for i, child in enumerate(tree.children):
        g = substitute(g, i, expand(child))
    return g


# ------------------------------------------------ modules from short holes


def _check_common(g: Graph, v: int, hole: Witness, length: int) -> tuple[int, list[int]]:
    if not is_connected(g):
        raise PreconditionError("graph must be connected")
    omega, _ = clique_number(g)
    if omega < 3:
        raise PreconditionError(f"clique number {omega} < 3")
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} out of range")
    if not has_clique(g.adj, g.adj[v], omega - 1):
        raise PreconditionError(f"vertex {v} is not in a maximum clique")
    c = list(hole.vertices)
    if len(c) != length or len(set(c)) != length:
        raise PreconditionError(f"expected a {length}-hole, got {c}")
    if induced_subgraph_in_order(g, tuple(c)) != cycle(length):
        raise PreconditionError(f"{c} is not an induced {length}-cycle in the given order")
    if vertex_set(c) & ~non_neighborhood(g, v):
        raise PreconditionError(f"hole {c} is not contained in M({v})")
    if not is_bull_free(g):
        raise PreconditionError("graph must be bull-free")
    if not is_locally_perfect(g):
        raise PreconditionError("graph must be locally perfect")
    return omega, c


def _hole_pattern(g: Graph, u: int, c: list[int]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(c) if g.adj[u] >> x & 1)


def _classify(g: Graph, c: list[int], families: dict[str, tuple[int, ...]]) -> dict[int, tuple[str, int]]:
    """Map each vertex of N(V(C)) to (family, i) where its hole-neighbourhood is ``{i + off}``."""
    k = len(c)
    table = {}
    for name, offsets in families.items():
        for i in range(k):
            table[tuple(sorted((i + o) % k for o in offsets))] = (name, i)
    out = {}
    bad = []
    for u in members(set_neighborhood(g, vertex_set(c))):
        key = _hole_pattern(g, u, c)
        if key in table:
            out[u] = table[key]
        else:
            bad.append(u)
    if bad:
        names = "∪".join(families)
        raise StructureViolation(f"vertex in N(V(C)) outside {names}", bad)
    return out


def _module_from_neighbourhood(g: Graph, v: int, c: list[int], families: dict[str, tuple[int, ...]]) -> VertexSet:
    classes = _classify(g, c, families)
    nv = g.adj[v]
    outside_y = [u for u in members(nv) if classes.get(u, ("none",))[0] != "Y"]
    if outside_y:
        raise StructureViolation("vertex of N(v) not in Y", outside_y)
    for x in members(nv):
        for y in members(g.adj[x] & nv):
            if _hole_pattern(g, x, c) != _hole_pattern(g, y, c):
                raise StructureViolation("adjacent vertices of N(v) with different hole-neighbourhoods", (x, y))
    comp = next((s for s in components(g, nv) if s.bit_count() > 1), None)
    if comp is None:
        raise StructureViolation("N(v) has no component containing an edge", (v,))
    if not is_homogeneous_set(g, comp):
        splitters = [u for u in members(g.vertices & ~comp) if 0 < (g.adj[u] & comp).bit_count() < comp.bit_count()]
        raise StructureViolation("component of N(v) is not a homogeneous set", splitters)
    return comp


def homogeneous_set_from_5hole(g: Graph, v: int, hole: Witness) -> VertexSet:
    """Homogeneous set of a graph whose non-neighbourhood of ``v`` holds a 5-hole.

    Input: connected, locally perfect, (P6, bull)-free, clique number >= 3,
    ``v`` in a maximum clique, ``hole`` a 5-hole (cycle order) inside M(v).
    Hole attachments are classified as single vertices (X), two vertices at
    distance two (Y), three consecutive (Z) or four consecutive (W); every
    vertex of N(v) must be in Y with adjacent ones sharing attachments, and
    the first component of N(v) with an edge is returned.
    """
    _check_common(g, v, hole, 5)
    if not is_P6_free(g):
        raise PreconditionError("graph must be P6-free")
    families = {"X": (0,), "Y": (0, 2), "Z": (0, 1, 2), "W": (0, 1, 2, 3)}
    return _module_from_neighbourhood(g, v, list(hole.vertices), families)


def homogeneous_set_from_7hole(g: Graph, v: int, hole: Witness) -> VertexSet:
    """As :func:`homogeneous_set_from_5hole` for a 7-hole in a (P8, C5, bull)-free graph.

    Attachments are limited to X (one vertex), Y (two at distance two) and Z
    (three consecutive).
    """
    _check_common(g, v, hole, 7)
    if not is_P8_free(g):
        raise PreconditionError("graph must be P8-free")
    if not is_C5_free(g):
        raise PreconditionError("graph must be C5-free")
    families = {"X": (0,), "Y": (0, 2), "Z": (0, 1, 2)}
    return _module_from_neighbourhood(g, v, list(hole.vertices), families)


def short_hole_in(g: Graph, s: VertexSet, length: int) -> Witness | None:
    """A hole of exactly ``length`` inside ``g[s]``, in host labels."""
    order = to_list(s)
    hit = find_odd_hole(induced_subgraph(g, s), min_length=length, max_length=length)
    if hit is None:
        return None
    return Witness(f"C{length}", tuple(order[i] for i in hit.vertices))
