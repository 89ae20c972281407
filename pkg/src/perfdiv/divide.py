"""Perfect division: partitions, the divisibility check and the colouring pipelines."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .canon import canonical_form
from .coloring import ColoringCertificate, clique_number, has_clique, max_clique, optimal_coloring
from .decompose import ModularTree, homogeneous_set_from_5hole, modular_decompose, short_hole_in
from .detect import (
    basic_violation,
    find_odd_antihole_ge7,
    is_bull_free,
    is_locally_perfect,
    is_P6_free,
    is_perfect,
    iter_holes,
    Witness,
)
from .errors import (
    CapacityError,
    NotPerfectlyDivisibleError,
    PreconditionError,
    StructureViolation,
)
from .graph import (
    MAX_N,
    Graph,
    VertexSet,
    complement,
    components,
    induced_subgraph,
    is_connected,
    lowest,
    members,
    to_list,
    vertex_set,
)
from .limits import PD_MAX_N, size_guard


@dataclass(frozen=True)
class PartitionCertificate:
    """``kind`` is ``"PD"`` (perfect part ``a``, clique-reducing part ``b``) or ``"TwoPerfect"``."""

    kind: str
    a: VertexSet
    b: VertexSet

    def violations(self, g: Graph) -> list[str]:
        problems = []
        if self.a & self.b:
            problems.append("parts overlap")
        if self.a | self.b != g.vertices:
            problems.append("parts do not cover the vertex set")
        if not is_perfect(induced_subgraph(g, self.a & g.vertices)):
            problems.append("first part is not perfect")
        if self.kind == "PD":
            if g.n and clique_number(g, self.b & g.vertices)[0] >= clique_number(g)[0]:
                problems.append("second part does not lower the clique number")
        elif self.kind == "TwoPerfect":
            if not is_perfect(induced_subgraph(g, self.b & g.vertices)):
                problems.append("second part is not perfect")
        else:
            problems.append(f"unknown certificate kind {self.kind!r}")
        return problems

    def to_json(self) -> dict:
        return {"kind": self.kind, "A": to_list(self.a), "B": to_list(self.b)}


# ------------------------------------------------------ perfect division


def obstructions(g: Graph) -> list[VertexSet]:
    """Vertex sets of all odd holes and odd antiholes, smallest first.

    A vertex set induces a perfect graph exactly when it contains none of them.
    """
    found = {vertex_set(h) for h in iter_holes(g, odd_only=True)}
    found |= {vertex_set(h) for h in iter_holes(complement(g), odd_only=True)}
    return sorted(found, key=lambda s: (s.bit_count(), s))


def _is_perfect_set(obs: list[VertexSet], s: VertexSet) -> bool:
    return not any(o & ~s == 0 for o in obs)


def _clique_reducing_part(adj, s: VertexSet, obs: list[VertexSet], omega: int) -> VertexSet | None:
    """Smallest B inside ``s`` meeting every obstruction in ``s`` with no ``omega``-clique.

    Any such B works as the clique-reducing part, and shrinking B keeps it
    clique-poor, so minimal hitting sets are the only candidates needed.
    """
    inside = [o for o in obs if o & ~s == 0]
    if not inside:
        return 0

    def dfs(b: VertexSet, budget: int) -> VertexSet | None:
        for o in inside:
            if not o & b:
                break
        else:
            return b
        if budget == 0:
            return None
        for x in members(o):
            if has_clique(adj, b & adj[x], omega - 1):
                continue
            found = dfs(b | (1 << x), budget - 1)
            if found is not None:
                return found
        return None

    for budget in range(1, s.bit_count() + 1):
        found = dfs(0, budget)
        if found is not None:
            return found
    return None


def pd_partition(g: Graph) -> PartitionCertificate | None:
    """Perfect part A and clique-reducing part B with |B| minimum, or None."""
    if g.n == 0:
        raise PreconditionError("perfect division needs at least one vertex")
    omega = max_clique(g.adj, g.vertices).bit_count()
    b = _clique_reducing_part(g.adj, g.vertices, obstructions(g), omega)
    if b is None:
        return None
    return PartitionCertificate("PD", g.vertices & ~b, b)


def find_nondivisible_subgraph(g: Graph, memo: dict | None = None) -> VertexSet | None:
    """Vertex set of a smallest induced subgraph with no perfect division, or None.

    Only connected induced subgraphs are examined: for a disconnected one, the
    components of top clique number contribute their own partitions and the
    rest go wholly into the clique-reducing part.
    """
    cap = size_guard(PD_MAX_N)
    if g.n > cap:
        raise CapacityError(f"divisibility check capped at n={cap}; set PERFDIV_MAX_N to raise it")
    obs = obstructions(g)
    if not obs:
        return None
    memo = {} if memo is None else memo
    smallest = obs[0].bit_count()
    subsets = sorted(
        (s for s in range(1 << g.n) if s.bit_count() >= smallest),
        key=lambda s: (s.bit_count(), s),
    )
    for s in subsets:
        if _is_perfect_set(obs, s) or not is_connected(g, s):
            continue
        key = canonical_form(induced_subgraph(g, s))
        ok = memo.get(key)
        if ok is None:
            omega = max_clique(g.adj, s).bit_count()
            ok = _clique_reducing_part(g.adj, s, obs, omega) is not None
            memo[key] = ok
        if not ok:
            return s
    return None


def is_perfectly_divisible(g: Graph) -> bool:
    return find_nondivisible_subgraph(g) is None


def _assign(colors: dict[int, int], part: dict[int, int], offset: int) -> int:
    for v, c in part.items():
        colors[v] = c + offset
    return max(part.values()) + 1 if part else 0


def pd_coloring(g: Graph) -> ColoringCertificate:
    """Colour by peeling perfect parts: at most C(omega + 1, 2) colours.

    Each level colours the perfect part optimally with fresh colours and
    recurses on the clique-reducing part. Raises
    :class:`NotPerfectlyDivisibleError` when some level has no partition.
    """
    obs = obstructions(g)
    colors: dict[int, int] = {}
    s = g.vertices
    offset = 0
    while s:
        omega = max_clique(g.adj, s).bit_count()
        b = _clique_reducing_part(g.adj, s, obs, omega)
        if b is None:
            raise NotPerfectlyDivisibleError(induced_subgraph(g, s), to_list(s))
        offset += _assign(colors, optimal_coloring(g, s & ~b), offset)
        s = b
    cert = ColoringCertificate.from_colors([colors[v] for v in range(g.n)])
    omega = clique_number(g)[0]
    assert cert.palette <= comb(omega + 1, 2), "peeling exceeded C(omega+1, 2)"
    return cert


# ------------------------------------------------- two perfect parts


def _max_clique_vertices(g: Graph, s: VertexSet, omega: int) -> list[int]:
    return [v for v in members(s) if has_clique(g.adj, g.adj[v] & s, omega - 1)]


def _module_via_hole(g: Graph, s: VertexSet, v: int) -> VertexSet:
    """Module of ``g[s]`` built from a 5-hole in M(v); raises StructureViolation."""
    mv = s & ~g.adj[v] & ~(1 << v)
    sub_m = induced_subgraph(g, mv)
    if find_odd_antihole_ge7(sub_m) is not None:
        raise StructureViolation("M(v) contains an odd antihole on >= 7 vertices", (v,))
    hole = short_hole_in(g, mv, 5)
    if hole is None:
        raise StructureViolation("imperfect M(v) without a 5-hole", (v,))
    order = to_list(s)
    index = {u: i for i, u in enumerate(order)}
    local = induced_subgraph(g, s)
    try:
        module_local = homogeneous_set_from_5hole(
            local, index[v], Witness(hole.kind, tuple(index[u] for u in hole.vertices))
        )
    except PreconditionError as exc:
        raise StructureViolation(f"module construction precondition failed: {exc}", (v,)) from exc
    return vertex_set(order[i] for i in members(module_local))


def _two_perfect(g: Graph, s: VertexSet) -> VertexSet:
    """Part X of a partition of ``g[s]`` into two perfect parts (Y is the rest).

    Any vertex of a maximum clique may serve as v. One with a perfect
    non-neighbourhood is preferred; otherwise the module construction is tried
    for each candidate in turn and the violation is raised only if all fail.
    """
    if not s:
        return 0
    comps = components(g, s)
    if len(comps) > 1:
        x = 0
        for c in comps:
            x |= _two_perfect(g, c)
        return x
    omega = max_clique(g.adj, s).bit_count()
    if omega <= 2:
        colors = optimal_coloring(g, s)
        if max(colors.values()) + 1 > 4:
            raise StructureViolation("triangle-free P6-free graph needs more than 4 colours", to_list(s))
        return vertex_set(v for v, c in colors.items() if c < 2)
    candidates = _max_clique_vertices(g, s, omega)
    for v in candidates:
        if is_perfect(induced_subgraph(g, s & ~g.adj[v] & ~(1 << v))):
            return g.adj[v] & s
    failures = []
    for v in candidates:
        try:
            module = _module_via_hole(g, s, v)
            break
        except StructureViolation as exc:
            failures.append(exc)
    else:
        first = failures[0]
        raise StructureViolation(f"{first.claim} (for every maximum-clique vertex)", first.vertices)
    keep = lowest(module)
    x = _two_perfect(g, s & ~(module & ~(1 << keep)))
    return x | module if x >> keep & 1 else x


def _brute_two_perfect(g: Graph) -> VertexSet | None:
    obs = obstructions(g)
    full = g.vertices
    for x in range(1 << max(g.n - 1, 0)):
        if _is_perfect_set(obs, x) and _is_perfect_set(obs, full & ~x):
            return x
    return None


def _require(ok: bool, what: str) -> None:
    if not ok:
        raise PreconditionError(what)


def two_perfect_partition(g: Graph, fallback: bool = False, check: bool = True) -> PartitionCertificate:
    """Split a locally perfect (P6, bull)-free graph into two perfect induced subgraphs.

    Follows the module-contraction induction: triangle-free pieces are split
    along a 4-colouring, otherwise a vertex of a maximum clique either gives
    the split (N(v), M(v) + v) directly or exposes a module which is
    contracted before recursing. ``fallback`` replaces a structure violation
    by exhaustive search.
    """
    if check:
        _require(is_bull_free(g), "graph must be bull-free")
        _require(is_P6_free(g), "graph must be P6-free")
        _require(is_locally_perfect(g), "graph must be locally perfect")
    try:
        x = _two_perfect(g, g.vertices)
    except StructureViolation:
        if not fallback:
            raise
        x = _brute_two_perfect(g)
        if x is None:
            raise
    cert = PartitionCertificate("TwoPerfect", x, g.vertices & ~x)
    problems = cert.violations(g)
    if problems:
        raise StructureViolation("two-perfect certificate failed validation: " + "; ".join(problems))
    return cert


# -------------------------------------------- basic (P6, bull)-free colouring


def _basic_color(g: Graph, s: VertexSet) -> dict[int, int]:
    if not s:
        return {}
    comps = components(g, s)
    if len(comps) > 1:
        colors: dict[int, int] = {}
        for c in comps:
            colors.update(_basic_color(g, c))
        return colors
    omega = max_clique(g.adj, s).bit_count()
    if omega <= 1:
        return {v: 0 for v in members(s)}
    if all(is_perfect(induced_subgraph(g, g.adj[v] & s)) for v in members(s)):
        x = _two_perfect(g, s)
        colors = dict(optimal_coloring(g, x))
        offset = max(colors.values()) + 1 if colors else 0
        _assign(colors, optimal_coloring(g, s & ~x), offset)
        return colors
    for v in members(s):
        mv = s & ~g.adj[v] & ~(1 << v)
        if is_perfect(induced_subgraph(g, mv)):
            break
    else:
        raise StructureViolation("no vertex with a perfect non-neighbourhood in a basic bull-free graph", to_list(s))
    colors = _basic_color(g, g.adj[v] & s)
    offset = max(colors.values()) + 1 if colors else 0
    _assign(colors, optimal_coloring(g, mv | (1 << v)), offset)
    return colors


def color_basic_p6bull(g: Graph, fallback: bool = False, check: bool = True) -> ColoringCertificate:
    """Colour a basic (P6, bull)-free graph with at most omega^2 colours."""
    if check:
        _require(is_bull_free(g), "graph must be bull-free")
        _require(is_P6_free(g), "graph must be P6-free")
        _require(basic_violation(g) is None, "graph must be basic bull-free")
    try:
        colors = _basic_color(g, g.vertices)
    except StructureViolation:
        if not fallback:
            raise
        colors = optimal_coloring(g)
    cert = ColoringCertificate.from_colors([colors[v] for v in range(g.n)])
    omega = clique_number(g)[0]
    if not cert.is_proper(g):
        raise StructureViolation("basic colouring is not proper")
    if cert.palette > omega ** 2:
        raise StructureViolation(f"basic colouring used {cert.palette} > omega^2 = {omega ** 2} colours")
    return cert


# -------------------------------------------------- general (P6, bull)-free


def _clique_blowup(q: Graph, sizes: list[int]) -> tuple[Graph, list[list[int]]]:
    """Replace quotient vertex ``i`` by a clique on ``sizes[i]`` vertices."""
    blocks = []
    start = 0
    for k in sizes:
        blocks.append(list(range(start, start + k)))
        start += k
    if start > MAX_N:
        raise CapacityError(f"weighted quotient would have {start} vertices; limit is {MAX_N}")
    masks = [vertex_set(b) for b in blocks]
    rows = [0] * start
    for i, block in enumerate(blocks):
        around = 0
        for j in members(q.adj[i]):
            around |= masks[j]
        for v in block:
            rows[v] = (masks[i] & ~(1 << v)) | around
    return Graph(start, tuple(rows)), blocks


def _lift(g: Graph, node: ModularTree) -> dict[int, int]:
    if node.kind == "leaf":
        return {lowest(node.vertices): 0}
    kids = [_lift(g, c) for c in node.children]
    palettes = [max(k.values()) + 1 for k in kids]
    colors: dict[int, int] = {}
    if node.kind == "parallel":
        for k in kids:
            colors.update(k)
        return colors
    if node.kind == "series":
        offset = 0
        for k, p in zip(kids, palettes):
            _assign(colors, k, offset)
            offset += p
        return colors
    if basic_violation(node.quotient) is not None:
        raise StructureViolation("prime quotient is not basic bull-free", to_list(node.vertices))
    blown, blocks = _clique_blowup(node.quotient, palettes)
    outer = _basic_color(blown, blown.vertices)
    for k, block in zip(kids, blocks):
        for v, c in k.items():
            colors[v] = outer[block[c]]
    return colors


def color_p6bull(g: Graph) -> ColoringCertificate:
    """Colour a (P6, bull)-free graph through its modular decomposition.

    Prime quotients are blown up (each vertex becomes a clique as large as its
    child's palette), coloured by the basic routine, and child colours are
    mapped onto the colours of their clique. The omega^7 ceiling is enforced.
    """
    _require(is_bull_free(g), "graph must be bull-free")
    _require(is_P6_free(g), "graph must be P6-free")
    if g.n == 0:
        return ColoringCertificate((), 0)
    colors = _lift(g, modular_decompose(g))
    cert = ColoringCertificate.from_colors([colors[v] for v in range(g.n)])
    omega = clique_number(g)[0]
    if not cert.is_proper(g):
        raise StructureViolation("lifted colouring is not proper")
    if cert.palette > omega ** 7:
        raise StructureViolation(f"lifted colouring used {cert.palette} > omega^7 = {omega ** 7} colours")
    return cert
