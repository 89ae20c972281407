"""Exact canonical labelling by partition refinement and individualization.

The search explores an equitable-refinement tree and keeps the leaf whose
relabelled adjacency rows are lexicographically largest. Siblings that are
twins (equal open or closed neighbourhoods) are pruned, since swapping them
is an automorphism fixing everything already individualized.
"""

from __future__ import annotations

from .graph import Graph, members


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                keyed.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(keyed) == 1:
                out.append(c)
            else:
                split = True
                out.extend(keyed[k] for k in sorted(keyed))
        cells = out
        if not split:
            return cells


def _twin_representatives(adj: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        bv = 1 << v
        for r in reps:
            br = 1 << r
            if adj[v] & ~br == adj[r] & ~bv:
                break
        else:
            reps.append(v)
    return reps


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        row = 0
        for u in members(adj[v]):
            row |= 1 << pos[u]
        code.append(row)
    return tuple(code)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position ``i``."""
    adj = g.adj
    if g.n == 0:
        return []
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        for v in _twin_representatives(adj, cell):
            rest = [u for u in cell if u != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    search([list(range(g.n))])
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    return Graph(g.n, _leaf_code(g.adj, order))


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    order = canonical_labeling(g)
    code = _leaf_code(g.adj, order)
    return bytes([g.n]) + b"".join(row.to_bytes(8, "little") for row in code)
