from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from intcol import Graph, GraphError, complete_graph, hypercube_graph, structural_profile
from intcol.graphs import COMPLETE, GENERIC, HYPERCUBE, Family, MAX_HYPERCUBE_DIMENSION, recognize_family
from reference import bfs_diameter


@pytest.mark.parametrize("n, m", [(2, 1), (4, 6), (12, 66)])
def test_complete_edge_counts(n, m):
    g = complete_graph(n)
    assert g.edge_count == m
    assert g.family == Family(COMPLETE, n)


def test_complete_two_is_single_edge():
    assert complete_graph(2).edges == ((0, 1),)


@pytest.mark.parametrize("d, v, m", [(1, 2, 1), (3, 8, 12), (4, 16, 32)])
def test_hypercube_sizes(d, v, m):
    g = hypercube_graph(d)
    assert (g.vertex_count, g.edge_count) == (v, m)


def test_generators_reject_bad_params():
    with pytest.raises(GraphError):
        complete_graph(0)
    with pytest.raises(GraphError):
        hypercube_graph(0)
    with pytest.raises(GraphError):
        hypercube_graph(MAX_HYPERCUBE_DIMENSION + 1)
    assert MAX_HYPERCUBE_DIMENSION >= 20


def test_hypercube_copies_split_by_top_bit():
    g = hypercube_graph(3)
    low = [e for e in g.edges if e[1] < 4]
    high = [(u - 4, v - 4) for u, v in g.edges if u >= 4]
    match = [e for e in g.edges if e[0] < 4 <= e[1]]
    assert low == list(hypercube_graph(2).edges) == high
    assert match == [(x, x + 4) for x in range(4)]


@pytest.mark.parametrize("n", range(1, 11))
def test_complete_family_properties(n):
    g = complete_graph(n)
    assert g.edge_count == comb(n, 2)
    assert set(g.degrees) == {n - 1}


@pytest.mark.parametrize("n", range(1, 11))
def test_hypercube_family_properties(n):
    g = hypercube_graph(n)
    p = structural_profile(g)
    assert p.is_regular and p.max_degree == n
    assert p.is_bipartite and p.is_triangle_free
    assert p.diameter == n
    if n <= 7:
        assert bfs_diameter(g.vertex_count, g.edges) == n


def test_profiles_of_small_graphs():
    p = structural_profile(complete_graph(4))
    assert (p.max_degree, p.is_regular, p.is_bipartite, p.is_triangle_free, p.diameter) == (3, True, False, False, 1)
    p = structural_profile(hypercube_graph(3))
    assert (p.max_degree, p.is_regular, p.is_bipartite, p.is_triangle_free, p.diameter) == (3, True, True, True, 3)
    p = structural_profile(complete_graph(2))
    assert (p.max_degree, p.is_regular, p.is_bipartite, p.is_triangle_free, p.diameter) == (1, True, True, True, 1)


def test_disconnected_diameter_is_undefined():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert structural_profile(g).diameter is None


def test_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(3, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (0, 1)))
    with pytest.raises(GraphError):
        Graph(3, ((0, 3),))
    with pytest.raises(GraphError):
        Graph(3, ((1, 2), (0, 1)))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_incidence_degree_sum():
    g = hypercube_graph(4)
    assert sum(g.degrees) == 2 * g.edge_count
    assert all(len(inc) == d for inc, d in zip(g.incidence, g.degrees))


def test_json_round_trip_and_canonical_bytes():
    for g in (complete_graph(6), hypercube_graph(3), Graph.from_edges(3, [(2, 1), (0, 1)])):
        assert Graph.from_json(g.to_json()) == g
    assert complete_graph(8).to_json() == complete_graph(8).to_json()
    assert hypercube_graph(5).to_json() == hypercube_graph(5).to_json()
    assert complete_graph(8).content_hash == complete_graph(8).content_hash


def test_reader_rejects_bad_documents():
    good = complete_graph(3).to_dict()
    for mutate in (
        lambda d: d.update(edges=[[0, 1], [0, 1]]),
        lambda d: d.update(edges=[[1, 1]]),
        lambda d: d.update(format="ic-graph/9"),
        lambda d: d.update(family={"kind": "hypercube", "param": 2}),
    ):
        doc = dict(good)
        mutate(doc)
        with pytest.raises(GraphError):
            Graph.from_dict(doc)


def test_hash_ignores_family_tag():
    g = complete_graph(4)
    generic = Graph(4, g.edges)
    assert generic.family.kind == GENERIC
    assert generic.content_hash == g.content_hash
    assert recognize_family(generic).family == Family(COMPLETE, 4)
    q = Graph(8, hypercube_graph(3).edges)
    assert recognize_family(q).family == Family(HYPERCUBE, 3)


graphs = st.integers(2, 8).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                      .filter(lambda e: e[0] < e[1]), max_size=20)
    .map(lambda es: Graph.from_edges(n, sorted(es))))


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_profile_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    p = structural_profile(g)
    assert p.is_bipartite == nx.is_bipartite(h)
    assert p.is_triangle_free == (sum(nx.triangles(h).values()) == 0)
    assert p.diameter == (nx.diameter(h) if nx.is_connected(h) else None)
    assert p.max_degree == max(d for _, d in h.degree())
    assert p.diameter == bfs_diameter(g.vertex_count, g.edges)
