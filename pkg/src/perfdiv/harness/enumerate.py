"""Small-graph generation: exhaustive by vertex augmentation, or seeded random."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable, Iterator

from ..canon import canonical_form
from ..errors import CapacityError, InvalidArgumentError
from ..graph import MAX_N, Graph
from ..limits import CLASS_MAX_N, EXHAUSTIVE_MAX_N, size_guard

# Number of graphs / connected graphs on n vertices up to isomorphism, n = 0..8.
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
KNOWN_CONNECTED_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117)


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    rows = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(n + 1, tuple(rows))


def _augment(level: list[Graph], connected: bool, keep: Callable[[Graph], bool] | None) -> list[Graph]:
    seen: set[bytes] = set()
    out = []
    for g in level:
        for nbrs in range(1 if connected else 0, 1 << g.n):
            h = _extend(g, nbrs)
            if keep is not None and not keep(h):
                continue
            key = canonical_form(h)
            if key not in seen:
                seen.add(key)
                out.append(h)
    return out


@lru_cache(maxsize=None)
def _levels(n: int, connected: bool, keep: Callable[[Graph], bool] | None) -> tuple[tuple[Graph, ...], ...]:
    if n == 0:
        return ((Graph(0, ()),),)
    below = _levels(n - 1, connected, keep)
    if n == 1:
        base = [Graph(1, (0,))]
        level = base if keep is None or keep(base[0]) else []
    else:
        level = _augment(list(below[-1]), connected, keep)
    return below + (tuple(level),)


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    keep: Callable[[Graph], bool] | None = None,
) -> Iterator[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices.

    ``keep`` restricts generation to a hereditary class (it must hold for
    every induced subgraph of a kept graph); augmentation only extends kept
    graphs, which is exact because every graph in a hereditary class arises
    from a member on one fewer vertex. In connected mode the parent is the
    graph minus a non-cut vertex, so connected parents suffice.
    """
    if n < 0:
        raise InvalidArgumentError("n must be >= 0")
    cap = size_guard(EXHAUSTIVE_MAX_N if keep is None else CLASS_MAX_N)
    if n > cap:
        raise CapacityError(f"exhaustive enumeration capped at n={cap}; set PERFDIV_MAX_N to raise it")
    yield from _levels(n, connected_only, keep)[n]


def enumerate_up_to(
    n: int,
    connected_only: bool = False,
    keep: Callable[[Graph], bool] | None = None,
) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from enumerate_graphs(k, connected_only, keep)


def random_graphs(n: int, p: float, seed: int, count: int) -> Iterator[Graph]:
    """G(n, p) samples from ``random.Random(seed)``.

    Each graph draws one uniform variate per pair in the order
    ``(0,1), (0,2), ..., (0,n-1), (1,2), ...`` and keeps the edge when the
    variate is below ``p``.
    """
    if not 0 <= n <= MAX_N:
        raise CapacityError(f"n={n} outside 0..{MAX_N}")
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(count):
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < p:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        yield Graph(n, tuple(rows))
