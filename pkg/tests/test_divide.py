import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import perfdiv.divide as divide
from perfdiv.coloring import clique_number
from perfdiv.detect import is_bull_free, is_locally_perfect, is_P6_free, is_perfect
from perfdiv.divide import (
    PartitionCertificate,
    color_basic_p6bull,
    color_p6bull,
    find_nondivisible_subgraph,
    is_perfectly_divisible,
    obstructions,
    pd_coloring,
    pd_partition,
    two_perfect_partition,
)
from perfdiv.errors import CapacityError, NotPerfectlyDivisibleError, PreconditionError, StructureViolation
from perfdiv.formats import parse_graph6
from perfdiv.graph import (
    bull,
    complete,
    complete_join,
    cycle,
    disjoint_union,
    empty,
    groetzsch,
    induced_subgraph,
    path,
    substitute,
    vertex_set,
)
from perfdiv.harness.enumerate import random_graphs

from . import oracles
from .strategies import graphs


def test_pd_partition_examples():
    cert = pd_partition(cycle(7))
    assert cert.violations(cycle(7)) == []
    assert cert.b.bit_count() == 1
    assert induced_subgraph(cycle(7), cert.a) == path(6)
    p = pd_partition(bull())
    assert (p.a, p.b) == (bull().vertices, 0)
    assert pd_partition(cycle(5)) is not None
    with pytest.raises(PreconditionError):
        pd_partition(empty(0))


def test_edgeless_graph_partition():
    cert = pd_partition(empty(3))
    assert (cert.a, cert.b) == (0b111, 0)
    assert pd_coloring(empty(3)).palette == 1


def test_obstructions_cover_holes_and_antiholes():
    assert obstructions(cycle(5)) == [0b11111]
    assert obstructions(path(5)) == []
    assert len(obstructions(groetzsch())) > 0


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_pd_partition_matches_subset_scan(g):
    cert = pd_partition(g)
    assert (cert is not None) == oracles.has_pd_partition(g)
    if cert is not None:
        assert cert.violations(g) == []


def test_pd_partition_is_smallest():
    assert pd_partition(cycle(5)).b.bit_count() == 1
    # 5-wheel: one hole vertex in B leaves the apex joined to P4, which is perfect
    g = complete_join(cycle(5), complete(1))
    cert = pd_partition(g)
    assert cert.violations(g) == [] and cert.b.bit_count() == 1 and not cert.b >> 5 & 1
    # two disjoint 5-holes need two vertices
    g = disjoint_union(cycle(5), cycle(5))
    assert pd_partition(g).b.bit_count() == 2


def test_divisibility_examples():
    assert not is_perfectly_divisible(groetzsch())
    assert not is_perfectly_divisible(complete_join(groetzsch(), complete(2)))
    assert is_perfectly_divisible(bull())
    assert is_perfectly_divisible(cycle(7))
    s = find_nondivisible_subgraph(groetzsch())
    assert s == groetzsch().vertices


def test_divisibility_size_guard(monkeypatch):
    monkeypatch.setenv("PERFDIV_MAX_N", "10")
    with pytest.raises(CapacityError):
        find_nondivisible_subgraph(groetzsch())


@pytest.mark.parametrize(
    "parts",
    [(cycle(5), cycle(5)), (cycle(5), complete(3)), (cycle(7), path(3), complete(2)), (complete_join(cycle(5), complete(1)), cycle(5))],
    ids=["C5+C5", "C5+K3", "C7+P3+K2", "W5+C5"],
)
def test_disconnected_graphs_combine(parts):
    g = parts[0]
    for h in parts[1:]:
        g = disjoint_union(g, h)
    cert = pd_partition(g)
    assert cert is not None and cert.violations(g) == []
    assert is_perfectly_divisible(g)


def test_disconnected_with_non_pd_component():
    g = disjoint_union(groetzsch(), complete(1))
    assert not is_perfectly_divisible(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6))
def test_divisibility_matches_oracle(g):
    assert is_perfectly_divisible(g) == oracles.is_pd(g)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=8), st.data())
def test_divisibility_is_hereditary(g, data):
    if is_perfectly_divisible(g):
        s = data.draw(st.integers(1, (1 << g.n) - 1))
        assert is_perfectly_divisible(induced_subgraph(g, s))


def test_pd_coloring_examples():
    cert = pd_coloring(cycle(7))
    assert cert.is_proper(cycle(7)) and cert.palette <= 3
    assert pd_coloring(bull()).palette == clique_number(bull())[0]
    with pytest.raises(NotPerfectlyDivisibleError) as info:
        pd_coloring(groetzsch())
    assert info.value.subgraph.n == 11


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_pd_coloring_bound(g):
    if find_nondivisible_subgraph(g) is not None:
        return
    w = clique_number(g)[0]
    cert = pd_coloring(g)
    assert cert.violations(g) == []
    assert cert.palette <= w * (w + 1) // 2


def test_two_perfect_examples():
    cert = two_perfect_partition(cycle(5))
    assert cert.kind == "TwoPerfect" and cert.violations(cycle(5)) == []
    cert = two_perfect_partition(path(5))
    assert cert.violations(path(5)) == []
    with pytest.raises(PreconditionError):
        two_perfect_partition(complete_join(complete(1), cycle(5)))
    with pytest.raises(PreconditionError):
        two_perfect_partition(path(6))


def test_two_perfect_on_construction_gap_graph():
    # the module construction fails for v = 4 here; another clique vertex works
    g = parse_graph6("GsOaQg")
    cert = two_perfect_partition(g)
    assert cert.violations(g) == []


def test_two_perfect_on_blown_up_hole():
    # C5 with two vertices doubled: nontrivial modules, omega = 4
    g =substitute(substitute(cycle(5), 0, complete(2)), 2, complete(2))
    assert is_locally_perfect(g) and is_bull_free(g) and is_P6_free(g)
    cert = two_perfect_partition(g)
    assert cert.violations(g) == []


def test_two_perfect_random_samples():
    checked = 0
    for n in (9, 10):
        for g in random_graphs(n, 0.45, seed=n, count=150):
            if is_bull_free(g) and is_P6_free(g) and is_locally_perfect(g):
                assert two_perfect_partition(g).violations(g) == []
                checked += 1
    assert checked > 0


def test_fallback_recovers(monkeypatch):
    def broken(g, s):
        raise StructureViolation("forced", ())

    monkeypatch.setattr(divide, "_two_perfect", broken)
    with pytest.raises(StructureViolation):
        two_perfect_partition(cycle(5))
    assert two_perfect_partition(cycle(5), fallback=True).violations(cycle(5)) == []
    monkeypatch.setattr(divide, "_basic_color", lambda g, s: (_ for _ in ()).throw(StructureViolation("forced")))
    assert color_basic_p6bull(cycle(5), fallback=True).is_proper(cycle(5))


def test_certificate_violations():
    c5 = cycle(5)
    assert PartitionCertificate("TwoPerfect", 0, c5.vertices).violations(c5) == ["second part is not perfect"]
    assert "parts overlap" in PartitionCertificate("PD", 1, c5.vertices).violations(c5)
    assert "second part does not lower the clique number" in PartitionCertificate("PD", 0b11, 0b11100).violations(c5)
    assert PartitionCertificate("PD", 0b1111, 0b10000).to_json() == {"kind": "PD", "A": [0, 1, 2, 3], "B": [4]}


def test_basic_coloring_examples():
    c = color_basic_p6bull(cycle(5))
    assert c.is_proper(cycle(5)) and c.palette <= 4
    assert color_basic_p6bull(complete(4)).palette == 4
    g = path(4)
    assert color_basic_p6bull(g).palette <= 2 * clique_number(g)[0]
    with pytest.raises(PreconditionError):
        color_basic_p6bull(disjoint_union(complete_join(complete(1), cycle(5)), empty(1)))


def test_general_coloring_examples():
    f = groetzsch()
    c = color_p6bull(f)
    assert c.is_proper(f) and c.palette <= 2 ** 7
    g = substitute(cycle(5), 0, cycle(5))
    c = color_p6bull(g)
    assert c.is_proper(g) and c.palette <= clique_number(g)[0] ** 7
    assert color_p6bull(complete(5)).palette == 5
    with pytest.raises(PreconditionError):
        color_p6bull(bull())


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_general_coloring_bound(g):
    assume(is_bull_free(g) and is_P6_free(g))
    c = color_p6bull(g)
    assert c.violations(g) == []
    assert c.palette <= clique_number(g)[0] ** 7


def test_perfect_inputs_give_perfect_answers():
    for g in (path(5), complete(3), cycle(6)):
        assert is_perfect(g)
        assert pd_coloring(g).palette == clique_number(g)[0]
