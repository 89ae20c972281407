"""Greedy vertex-deletion shrinking of counterexamples."""

from __future__ import annotations

from typing import Callable

from ..detect import is_perfect
from ..divide import find_nondivisible_subgraph
from ..errors import InvalidArgumentError
from ..graph import Graph, delete_vertices
from .campaign import THEOREMS

Claim = Callable[[Graph], bool]


def shrink_counterexample(g: Graph, claim: Claim) -> Graph:
    """Delete vertices while the claim keeps failing; the result is vertex-minimal.

    ``claim(h)`` returns True when the claim holds for ``h``.
    """
    if claim(g):
        raise InvalidArgumentError("claim holds on the input; nothing to shrink")
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            h = delete_vertices(g, 1 << v)
            if not claim(h):
                g = h
                changed = True
                break
    return g


CLAIMS: dict[str, Claim] = {
    "pd": lambda g: find_nondivisible_subgraph(g) is None,
    "perfect": is_perfect,
}


def named_claim(name: str) -> Claim:
    if name in CLAIMS:
        return CLAIMS[name]
    if name in THEOREMS:
        return THEOREMS[name].holds
    raise KeyError(f"unknown claim {name!r}; known: {sorted(CLAIMS) + sorted(THEOREMS)}")
