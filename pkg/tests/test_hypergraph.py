from itertools import combinations

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from conftest import hg, simplicial_complexes, triangle_boundary
from oracles import all_subsets
from hyperhom.errors import (
    DuplicateVertexError,
    TooManyVerticesError,
    UnknownVertexError,
    VertexSetMismatchError,
)
from hyperhom.hypergraph import (
    Hyperedge,
    Hypergraph,
    VertexSet,
    complement,
    complete,
    complete_uniform,
    cosimplicial_closure,
    is_cosimplicial,
    is_simplicial,
    make_hyperedge,
    simplicial_closure,
)


def test_vertex_set_rejects_duplicates():
    with pytest.raises(DuplicateVertexError):
        VertexSet(("a", "b", "a"))


def test_vertex_set_order_is_declaration_order():
    V = VertexSet(("z", "a", "m"))
    assert [V.index(x) for x in "zam"] == [0, 1, 2]
    with pytest.raises(UnknownVertexError):
        V.index("q")


def test_make_hyperedge_sorts_by_vertex_order():
    V = VertexSet(("z", "a", "m"))
    e = make_hyperedge(["m", "z"], V)
    assert tuple(e) == (0, 2)
    assert e.dimension == 1


def test_hyperedge_must_be_increasing_and_nonempty():
    with pytest.raises(ValueError):
        Hyperedge(())
    with pytest.raises(ValueError):
        Hyperedge((1, 0))
    with pytest.raises(ValueError):
        Hyperedge((1, 1))


def test_complete_counts():
    for n in range(1, 7):
        D = complete(VertexSet.of_size(n))
        assert len(D) == 2**n - 1
        assert set(map(tuple, D)) == set(all_subsets(n))


def test_complete_uniform_is_one_layer():
    V = VertexSet.of_size(5)
    layer = complete_uniform(V, 2)
    assert len(layer) == 10
    assert all(e.dimension == 2 for e in layer)


def test_too_many_vertices():
    with pytest.raises(TooManyVerticesError):
        complete(VertexSet.of_size(5), max_vertices=4)


def test_complement_of_triangle_boundary_is_top_cell():
    K = triangle_boundary()
    D = complete(K.vertex_set)
    assert [tuple(e) for e in complement(D, K)] == [(0, 1, 2)]


def test_complement_needs_same_vertices():
    with pytest.raises(VertexSetMismatchError):
        complement(hg(3, (0,)), hg(4, (0,)))


def test_example_hypergraphs():
    K = triangle_boundary()
    assert is_simplicial(K) and not is_cosimplicial(K)
    L = hg(4, (0, 1), (0, 2), (0, 1, 2))
    assert not is_simplicial(L)
    # closed under supersets on three vertices, but not once a fourth exists
    assert not is_cosimplicial(L)
    assert is_cosimplicial(hg(3, (0, 1), (0, 2), (0, 1, 2)))


def test_complete_is_both():
    D = complete(VertexSet.of_size(4))
    assert is_simplicial(D) and is_cosimplicial(D)


def test_closure_of_top_cell():
    top = hg(3, (0, 1, 2))
    assert len(simplicial_closure(top)) == 7
    assert len(cosimplicial_closure(hg(3, (0,)))) == 4


def test_sorted_edges_and_counts():
    K = simplicial_closure(hg(4, (0, 1, 2), (2, 3)))
    assert K.counts_by_dimension() == {0: 4, 1: 4, 2: 1}
    assert K.top_dimension == 2
    edges = K.sorted_edges()
    assert edges == sorted(edges, key=Hyperedge.sort_key)
    assert K.format_edge(edges[-1]) == "v0v1v2"


def brute_simplicial(h):
    edges = set(map(tuple, h))
    return all(
        sub in edges for e in edges for k in range(1, len(e)) for sub in combinations(e, k)
    )


def brute_cosimplicial(h):
    edges = set(map(tuple, h))
    n = len(h.vertex_set)
    return all(
        s in edges for e in edges for s in all_subsets(n) if set(e) <= set(s)
    )


@st.composite
def any_hypergraph(draw):
    n = draw(st.integers(1, 5))
    edges = draw(st.sets(st.sampled_from(all_subsets(n)), max_size=10))
    return hg(n, *edges)


@given(any_hypergraph())
def test_closure_checks_match_subset_enumeration(h):
    assert is_simplicial(h) == brute_simplicial(h)
    assert is_cosimplicial(h) == brute_cosimplicial(h)


@given(any_hypergraph())
def test_closures_are_extensive_idempotent_and_closed(h):
    for close, check in ((simplicial_closure, is_simplicial), (cosimplicial_closure, is_cosimplicial)):
        c = close(h)
        assert h.edges <= c.edges
        assert check(c)
        assert close(c) == c


@given(any_hypergraph(), st.data())
def test_closures_are_monotone(h, data):
    extra = data.draw(st.sets(st.sampled_from(all_subsets(len(h.vertex_set))), max_size=3))
    bigger = h.union(hg(len(h.vertex_set), *extra))
    assert simplicial_closure(h).edges <= simplicial_closure(bigger).edges
    assert cosimplicial_closure(h).edges <= cosimplicial_closure(bigger).edges


@settings(max_examples=60)
@given(simplicial_complexes())
def test_complement_duality_and_involution(K):
    D = complete(K.vertex_set)
    L = complement(D, K)
    assert is_cosimplicial(L)
    assert is_simplicial(complement(D, L))
    assert complement(D, L) == K


def test_hypergraph_rejects_foreign_vertex():
    with pytest.raises(ValueError):
        Hypergraph(VertexSet.of_size(2), frozenset({Hyperedge((0, 5))}))
