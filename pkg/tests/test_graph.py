import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from perfdiv.canon import canonical_form
from perfdiv.coloring import chromatic_number, clique_number
from perfdiv.decompose import is_homogeneous_set
from perfdiv.errors import CapacityError, InvalidArgumentError
from perfdiv.graph import (
    Graph,
    bull,
    catalog,
    complement,
    complete,
    complete_join,
    components,
    cycle,
    delete_vertices,
    empty,
    fork,
    graph_e,
    groetzsch,
    induced_subgraph,
    is_clique,
    is_connected,
    is_stable,
    mycielski,
    neighborhood,
    non_neighborhood,
    odd_torch,
    path,
    relabel,
    substitute,
    to_list,
    vertex_set,
)

from . import oracles
from .strategies import graphs


def test_graph_rejects_bad_adjacency():
    with pytest.raises(InvalidArgumentError):
        Graph(2, (0b10, 0))
    with pytest.raises(InvalidArgumentError):
        Graph(1, (1,))
    with pytest.raises(InvalidArgumentError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(CapacityError):
        Graph.from_edges(65, [])


def test_induced_subgraph_examples():
    c5 = cycle(5)
    assert induced_subgraph(c5, c5.vertices) == c5
    assert induced_subgraph(c5, vertex_set([0, 1, 2, 3])) == path(4)
    assert induced_subgraph(bull(), vertex_set([0, 1, 2])) == complete(3)
    with pytest.raises(InvalidArgumentError):
        induced_subgraph(c5, 1 << 7)


def test_induced_subgraph_keeps_order():
    g = Graph.from_edges(5, [(4, 1), (1, 3)])
    h = induced_subgraph(g, vertex_set([1, 3, 4]))
    assert h.edges() == [(0, 1), (0, 2)]


def test_neighbourhoods():
    c5 = cycle(5)
    assert to_list(neighborhood(c5, 0)) == [1, 4]
    assert to_list(non_neighborhood(c5, 0)) == [2, 3]
    assert all(non_neighborhood(complete(4), v) == 0 for v in range(4))
    assert neighborhood(bull(), 3).bit_count() == 1
    with pytest.raises(InvalidArgumentError):
        neighborhood(c5, 5)


@given(graphs(max_n=9))
def test_neighbourhood_partition(g):
    for v in range(g.n):
        n, m = neighborhood(g, v), non_neighborhood(g, v)
        assert n & m == 0 and not (n | m) >> v & 1
        assert n | m | (1 << v) == g.vertices


def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    assert canonical_form(complement(cycle(5))) == canonical_form(cycle(5))
    assert complement(cycle(7)).m == 14


@given(graphs(max_n=10))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_complete_join_examples():
    assert complete_join(complete(1), complete(1)) == complete(2)
    assert canonical_form(complete_join(empty(2), empty(2))) == canonical_form(cycle(4))
    assert clique_number(complete_join(groetzsch(), complete(3)))[0] == 5
    with pytest.raises(CapacityError):
        complete_join(complete(40), complete(30))


@given(graphs(max_n=6), graphs(max_n=6))
def test_complete_join_adds_clique_numbers(g, h):
    assert clique_number(complete_join(g, h))[0] == clique_number(g)[0] + clique_number(h)[0]


def test_substitute_examples():
    assert substitute(complete(2), 0, complete(2)) == complete(3)
    c4 = substitute(path(3), 1, empty(2))
    assert canonical_form(c4) == canonical_form(cycle(4))
    # brute-force construction: P3 = 0-1-2 with 1 replaced by {1, 3}
    assert sorted(c4.edges()) == sorted([(0, 1), (1, 2), (0, 3), (2, 3)])
    with pytest.raises(CapacityError):
        substitute(complete(40), 0, complete(30))


@given(graphs(max_n=7), st.data())
def test_substitute_single_vertex_is_identity(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    assert canonical_form(substitute(g, v, complete(1))) == canonical_form(g)


@given(graphs(min_n=2, max_n=6), graphs(min_n=2, max_n=5), st.data())
def test_substitute_image_is_homogeneous(g, h, data):
    v = data.draw(st.integers(0, g.n - 1))
    s = substitute(g, v, h)
    image = (1 << v) | vertex_set(range(g.n, g.n + h.n - 1))
    assert is_homogeneous_set(s, image)
    assert induced_subgraph(s, image).m == h.m


def test_relabel_and_delete():
    g = relabel(path(3), [2, 0, 1])
    assert sorted(g.edges()) == [(0, 1), (0, 2)]
    assert delete_vertices(cycle(5), 1) == path(4)


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert components(g) == [0b11, 0b100, 0b11000]
    assert not is_connected(g)
    assert is_connected(g, 0b11000)
    assert is_connected(empty(0))
    assert is_clique(complete(4), 0b1111) and is_stable(empty(3), 0b111)


def test_catalog_shapes():
    b = catalog("bull").graph
    assert (b.n, b.m) == (5, 5)
    assert sum(1 for u, v in b.edges() for w in range(b.n) if w > v and b.has_edge(u, w) and b.has_edge(v, w)) == 1
    f = fork()
    assert (f.n, f.m) == (5, 4)
    assert sorted(f.degrees()) == [1, 1, 1, 2, 3]
    e = graph_e()
    assert (e.n, e.m) == (6, 5) and e.degrees()[2] == 3
    t = odd_torch(5, [0])
    assert (t.n, t.m) == (7, 7)
    assert catalog("torch7", stable=[0, 2]).graph == odd_torch(7, [0, 2])
    assert catalog("K4").graph == complete(4)
    assert catalog("mycielski:K2").graph.n == 5
    with pytest.raises(InvalidArgumentError):
        catalog("nonsense")


@pytest.mark.parametrize("k,stable", [(4, [0]), (5, []), (5, [0, 1]), (7, [0, 9])])
def test_odd_torch_rejects(k, stable):
    with pytest.raises(InvalidArgumentError):
        odd_torch(k, stable)


def test_groetzsch_fixture():
    f = groetzsch()
    assert (f.n, f.m) == (11, 20)
    assert clique_number(f)[0] == 2
    assert chromatic_number(f)[0] == 4
    assert catalog("F").graph == f


@pytest.mark.parametrize("g", [complete(2), cycle(5), path(4), empty(3), cycle(4)], ids=str)
def test_mycielski_counts(g):
    m = mycielski(g)
    assert m.n == 2 * g.n + 1
    assert m.m == 3 * g.m + g.n
    assert chromatic_number(m)[0] == chromatic_number(g)[0] + 1


def test_mycielski_keeps_triangle_free():
    for g in (complete(2), cycle(5), path(5)):
        assert clique_number(mycielski(g))[0] == 2


def test_mycielski_chromatic_against_oracle():
    m = mycielski(cycle(5))
    assert oracles.chi(m.n, oracles.edge_set(m)) == 4
