"""Exact maximum clique and chromatic number on bitset graphs, with certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, VertexSet, members, to_list


@dataclass(frozen=True)
class ColoringCertificate:
    """``colors[v]`` is the colour of vertex ``v``; colours are ``0..palette-1``."""

    colors: tuple[int, ...]
    palette: int

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "ColoringCertificate":
        # Renumber by first appearance so equal colourings compare equal.
        remap: dict[int, int] = {}
        out = []
        for c in colors:
            out.append(remap.setdefault(c, len(remap)))
        return cls(tuple(out), len(remap))

    def violations(self, g: Graph) -> list[str]:
        problems = []
        if len(self.colors) != g.n:
            return [f"{len(self.colors)} colours for {g.n} vertices"]
        if len(set(self.colors)) != self.palette:
            problems.append(f"palette {self.palette} but {len(set(self.colors))} colours used")
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                problems.append(f"edge {u}-{v} is monochromatic")
                break
        if g.n and self.palette < clique_number(g)[0]:
            problems.append("palette smaller than the clique number")
        return problems

    def is_proper(self, g: Graph) -> bool:
        return len(self.colors) == g.n and all(self.colors[u] != self.colors[v] for u, v in g.edges())

    def to_json(self) -> dict:
        return {"palette": self.palette, "colors": list(self.colors)}


# ----------------------------------------------------------------- cliques


def _color_sort(adj: Sequence[int], p: VertexSet) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = p
    while rest:
        color += 1
        q = rest
        while q:
            low = q & -q
            v = low.bit_length() - 1
            rest ^= low
            q &= ~adj[v] & ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(adj: Sequence[int], candidates: VertexSet, target: int | None = None) -> VertexSet:
    """Maximum clique inside ``candidates`` by colour-bounded branch and bound.

    With ``target`` set, the search stops as soon as a clique of that size is
    found (the result is then only guaranteed to have size >= target when one
    exists).
    """
    best = [0, 0]  # size, mask

    def expand(r: VertexSet, rsize: int, p: VertexSet) -> bool:
        order, bounds = _color_sort(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if rsize + bounds[i] <= best[0]:
                return False
            v = order[i]
            bv = 1 << v
            newp = p & adj[v]
            if newp:
                if expand(r | bv, rsize + 1, newp):
                    return True
            elif rsize + 1 > best[0]:
                best[0], best[1] = rsize + 1, r | bv
                if target is not None and best[0] >= target:
                    return True
            p &= ~bv
        return False

    if candidates:
        expand(0, 0, candidates)
    return best[1]


def clique_number(g: Graph, within: VertexSet | None = None) -> tuple[int, list[int]]:
    """Clique number of ``g`` (or of ``g[within]``) and a maximum clique."""
    s = g.vertices if within is None else within
    clique = max_clique(g.adj, s)
    return clique.bit_count(), to_list(clique)


def has_clique(adj: Sequence[int], candidates: VertexSet, k: int) -> bool:
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    return max_clique(adj, candidates, target=k).bit_count() >= k


# --------------------------------------------------------------- colouring


def _dsatur(adj: Sequence[int], verts: list[int]) -> dict[int, int]:
    colors: dict[int, int] = {}
    classes: list[int] = []
    vset = 0
    for v in verts:
        vset |= 1 << v
    uncolored = set(verts)
    while uncolored:
        v = max(uncolored, key=lambda u: (sum(1 for c in classes if c & adj[u]), (adj[u] & vset).bit_count(), -u))
        for c, cls in enumerate(classes):
            if not cls & adj[v]:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
        uncolored.discard(v)
    return colors


def _k_coloring(adj: Sequence[int], verts: list[int], k: int) -> dict[int, int] | None:
    vset = 0
    for v in verts:
        vset |= 1 << v
    deg = {v: (adj[v] & vset).bit_count() for v in verts}
    colors: dict[int, int] = {}
    classes: list[int] = []

    def pick() -> tuple[int, int]:
        best_v, best_key, best_sat = -1, None, 0
        for v in verts:
            if v in colors:
                continue
            sat = 0
            for cls in classes:
                if cls & adj[v]:
                    sat += 1
            key = (sat, deg[v])
            if best_key is None or key > best_key:
                best_v, best_key, best_sat = v, key, sat
        return best_v, best_sat

    def solve() -> bool:
        if len(colors) == len(verts):
            return True
        v, sat = pick()
        if sat == k:
            return False
        bv = 1 << v
        for c in range(len(classes)):
            if not classes[c] & adj[v]:
                classes[c] |= bv
                colors[v] = c
                if solve():
                    return True
                classes[c] &= ~bv
                del colors[v]
        if len(classes) < k:
            classes.append(bv)
            colors[v] = len(classes) - 1
            if solve():
                return True
            classes.pop()
            del colors[v]
        return False

    return dict(colors) if solve() else None


def optimal_coloring(g: Graph, within: VertexSet | None = None) -> dict[int, int]:
    """Minimum colouring of ``g[within]`` as a vertex -> colour dict."""
    s = g.vertices if within is None else within
    verts = to_list(s)
    if not verts:
        return {}
    lower = max_clique(g.adj, s).bit_count()
    best = _dsatur(g.adj, verts)
    upper = max(best.values()) + 1
    for k in range(lower, upper):
        found = _k_coloring(g.adj, verts, k)
        if found is not None:
            return found
    return best


def chromatic_number(g: Graph) -> tuple[int, ColoringCertificate]:
    if g.n == 0:
        return 0, ColoringCertificate((), 0)
    colors = optimal_coloring(g)
    cert = ColoringCertificate.from_colors([colors[v] for v in range(g.n)])
    return cert.palette, cert


def is_k_colorable(g: Graph, k: int) -> bool:
    return _k_coloring(g.adj, list(range(g.n)), k) is not None if g.n else True


def greedy_color_count(g: Graph) -> int:
    colors = _dsatur(g.adj, list(members(g.vertices)))
    return max(colors.values()) + 1 if colors else 0
