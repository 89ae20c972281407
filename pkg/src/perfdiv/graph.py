"""Immutable bitset graphs, vertex-set helpers and graph constructions.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` used as a bitset
(bit ``v`` set means ``v`` is a member); every neighbourhood, module and
partition in the package is passed around in this form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapacityError, InvalidArgumentError

MAX_N = 64

VertexSet = int


def bit(v: int) -> VertexSet:
    return 1 << v


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def members(s: VertexSet) -> Iterator[int]:
    """Yield the members of ``s`` in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def to_list(s: VertexSet) -> list[int]:
    return list(members(s))


def size(s: VertexSet) -> int:
    return s.bit_count()


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with adjacency rows stored as bitsets."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise CapacityError(f"graph has {self.n} vertices; limit is {MAX_N}")
        if len(self.adj) != self.n:
            raise InvalidArgumentError("adjacency must have one row per vertex")
        allv = full_set(self.n)
        for v, row in enumerate(self.adj):
            if row & ~allv:
                raise InvalidArgumentError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise InvalidArgumentError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise InvalidArgumentError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_N:
            raise CapacityError(f"graph has {n} vertices; limit is {MAX_N}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgumentError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in members(self.adj[v] & full_set(v))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def __len__(self) -> int:
        return self.n


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidArgumentError(f"vertex {v} out of range for n={g.n}")


def _check_set(g: Graph, s: VertexSet) -> None:
    if s < 0 or s & ~g.vertices:
        raise InvalidArgumentError(f"vertex set {bin(s)} is not a subset of 0..{g.n - 1}")


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v]


def non_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.vertices & ~g.adj[v] & ~(1 << v)


def set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with a neighbour in ``s``."""
    out = 0
    for v in members(s):
        out |= g.adj[v]
    return out & ~s


def set_non_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with no neighbour in ``s``."""
    return g.vertices & ~s & ~set_neighborhood(g, s)


def is_complete_to(g: Graph, u: int, s: VertexSet) -> bool:
    return g.adj[u] & s == s


def is_anticomplete_to(g: Graph, u: int, s: VertexSet) -> bool:
    return not g.adj[u] & s


def is_clique(g: Graph, s: VertexSet) -> bool:
    return all(g.adj[v] & s == s & ~(1 << v) for v in members(s))


def is_stable(g: Graph, s: VertexSet) -> bool:
    return all(not g.adj[v] & s for v in members(s))


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``g[within]`` ordered by their smallest vertex."""
    rest = g.vertices if within is None else within
    comps = []
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in members(frontier):
                grow |= g.adj[v]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    s = g.vertices if within is None else within
    if not s:
        return True
    return components(g, s)[0] == s


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled in increasing vertex order."""
    _check_set(g, s)
    order = to_list(s)
    index = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(order), tuple(rows))


def delete_vertices(g: Graph, s: VertexSet) -> Graph:
    return induced_subgraph(g, g.vertices & ~s)


def complement(g: Graph) -> Graph:
    allv = g.vertices
    return Graph(g.n, tuple(allv & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_N:
        raise CapacityError(f"union would have {n} vertices; limit is {MAX_N}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def complete_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    ``g`` keeps labels ``0..n(g)-1``; ``h`` is shifted up by ``n(g)``.
    """
    n = g.n + h.n
    if n > MAX_N:
        raise CapacityError(f"join would have {n} vertices; limit is {MAX_N}")
    gpart = full_set(g.n)
    hpart = full_set(n) & ~gpart
    rows = [row | hpart for row in g.adj] + [(row << g.n) | gpart for row in h.adj]
    return Graph(n, tuple(rows))


def substitute(g: Graph, v: int, h: Graph) -> Graph:
    """Replace vertex ``v`` of ``g`` by a copy of ``h``.

    Labelling: vertices of ``g`` other than ``v`` keep their labels, vertex 0
    of ``h`` takes over label ``v`` and vertices ``1..n(h)-1`` of ``h`` are
    appended as ``n(g)..n(g)+n(h)-2``. Every vertex of the copy is adjacent to
    every former neighbour of ``v``.
    """
    _check_vertex(g, v)
    if h.n == 0:
        raise InvalidArgumentError("cannot substitute the empty graph")
    n = g.n - 1 + h.n
    if n > MAX_N:
        raise CapacityError(f"substitution would have {n} vertices; limit is {MAX_N}")
    image = [v] + list(range(g.n, n))
    image_set = vertex_set(image)
    nv = g.adj[v]
    rows = [0] * n
    for u in range(g.n):
        if u != v:
            row = g.adj[u] & ~(1 << v)
            if nv >> u & 1:
                row |= image_set
            rows[u] = row
    for i, u in enumerate(image):
        row = nv
        for j in members(h.adj[i]):
            row |= 1 << image[j]
        rows[u] = row
    return Graph(n, tuple(rows))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidArgumentError("perm must be a permutation of 0..n-1")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in members(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


def mycielski(g: Graph) -> Graph:
    """Mycielskian: originals ``0..n-1``, shadows ``n..2n-1``, apex ``2n``."""
    n = g.n
    total = 2 * n + 1
    if total > MAX_N:
        raise CapacityError(f"Mycielskian would have {total} vertices; limit is {MAX_N}")
    edges = list(g.edges())
    for v in range(n):
        for u in members(g.adj[v]):
            edges.append((n + v, u))
        edges.append((n + v, 2 * n))
    return Graph.from_edges(total, edges)


# ---------------------------------------------------------------- catalog


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Graph
    provenance: dict = field(default_factory=dict, compare=False)


@lru_cache(maxsize=None)
def path(k: int) -> Graph:
    if k < 1:
        raise InvalidArgumentError("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


@lru_cache(maxsize=None)
def cycle(k: int) -> Graph:
    if k < 3:
        raise InvalidArgumentError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


@lru_cache(maxsize=None)
def complete(k: int) -> Graph:
    if k < 0:
        raise InvalidArgumentError("complete graph needs k >= 0")
    return Graph.from_edges(k, combinations(range(k), 2))


@lru_cache(maxsize=None)
def empty(k: int) -> Graph:
    if k < 0:
        raise InvalidArgumentError("empty graph needs k >= 0")
    return Graph(k, (0,) * k)


@lru_cache(maxsize=None)
def bull() -> Graph:
    """Triangle 0-1-2 with pendant 3 on 1 and pendant 4 on 2."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@lru_cache(maxsize=None)
def fork() -> Graph:
    """Claw centred at 0 with leaves 1, 2 and the edge to 3 subdivided by 4."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (0, 4), (4, 3)])


@lru_cache(maxsize=None)
def graph_e() -> Graph:
    """Path 0-1-2-3-4 plus vertex 5 adjacent only to 2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])


@lru_cache(maxsize=None)
def groetzsch() -> Graph:
    """The Mycielski-Groetzsch graph: Mycielskian of C5 (itself the Mycielskian of K2)."""
    return mycielski(mycielski(complete(2)))


def odd_torch(k: int, stable: Iterable[int]) -> Graph:
    """Odd hole ``0..k-1`` (cycle order), ``y = k`` attached to ``stable``, ``x = k+1`` pendant on ``y``."""
    s = sorted(set(stable))
    if k < 5 or k % 2 == 0:
        raise InvalidArgumentError(f"odd torch needs an odd hole length k >= 5, got {k}")
    if not s:
        raise InvalidArgumentError("odd torch needs a nonempty attachment set")
    if any(not 0 <= i < k for i in s):
        raise InvalidArgumentError(f"attachment set {s} not within the hole 0..{k - 1}")
    for i in s:
        if (i + 1) % k in s:
            raise InvalidArgumentError(f"attachment set {s} is not stable on C{k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(i, k) for i in s]
    edges.append((k, k + 1))
    return Graph.from_edges(k + 2, edges)


def _parse_size(name: str, prefix: str) -> int | None:
    rest = name[len(prefix):]
    if name.startswith(prefix) and rest.isdigit():
        return int(rest)
    return None


def catalog(name: str, **params) -> NamedGraph:
    """Look up a named graph.

    Names: ``bull``, ``fork``, ``E``, ``groetzsch`` (alias ``F``), ``P<k>``,
    ``C<k>``, ``K<k>``, ``empty<k>``, ``torch<k>`` (needs ``stable=``), and
    ``mycielski:<name>`` for the Mycielskian of another catalog entry.
    """
    fixed = {"bull": bull, "fork": fork, "E": graph_e, "groetzsch": groetzsch, "F": groetzsch}
    if name in fixed:
        return NamedGraph(name, fixed[name](), {})
    if name.startswith("mycielski:"):
        inner = catalog(name.split(":", 1)[1], **params)
        return NamedGraph(name, mycielski(inner.graph), {"of": inner.name, **inner.provenance})
    for prefix, ctor in (("empty", empty), ("torch", None), ("P", path), ("C", cycle), ("K", complete)):
        k = _parse_size(name, prefix)
        if k is None:
            continue
        if ctor is None:
            stable = tuple(params.get("stable", ()))
            return NamedGraph(name, odd_torch(k, stable), {"k": k, "stable": list(stable)})
        return NamedGraph(name, ctor(k), {"k": k})
    raise InvalidArgumentError(f"unknown catalog graph {name!r}")
