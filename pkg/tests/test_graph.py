import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import edge_set, naive_chordless_paths
from prext import (
    Graph, chordless_paths_between, complement, complete_graph, cycle_graph, empty_graph,
    from_edges, house_graph, induced_subgraph, is_clique, is_connected, is_stable, path_graph,
    prism_graph,
)
from prext.graph import bits, lowest, popcount, to_mask


def test_bit_helpers():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert popcount(0b1011) == 3
    assert lowest(0b1000) == 3


def test_from_edges_dedups_and_orders():
    g = from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.num_edges() == 2


@pytest.mark.parametrize("edges,n", [([(0, 0)], 2), ([(0, 3)], 3), ([(-1, 0)], 2)])
def test_from_edges_rejects_bad_pairs(edges, n):
    with pytest.raises(ValueError):
        from_edges(n, edges)


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_vertex_cap():
    with pytest.raises(ValueError):
        Graph(64, [0] * 64)
    with pytest.raises(ValueError):
        from_edges(64, [])


def test_named_graphs():
    assert complete_graph(4).num_edges() == 6
    assert cycle_graph(5).num_edges() == 5
    h = house_graph()
    assert h.num_edges() == 6 and h.has_edge(0, 2)
    p = prism_graph()
    assert p.n == 6 and p.num_edges() == 9
    assert all(p.degree(v) == 3 for v in range(6))
    with pytest.raises(ValueError):
        prism_graph(0, 1, 1)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    co = complement(g)
    for u, v in itertools.combinations(range(g.n), 2):
        assert co.has_edge(u, v) != g.has_edge(u, v)


def test_complement_of_empty_is_complete():
    assert complement(empty_graph(5)) == complete_graph(5)


@given(graphs(min_n=1), st.data())
def test_induced_subgraph_keeps_exactly_inner_edges(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    h, mapping = induced_subgraph(g, s)
    assert list(mapping) == sorted(s)
    assert h.n == len(s)
    expected = {frozenset((mapping[a], mapping[b])) for a, b in h.edges()}
    assert expected == {e for e in edge_set(g) if e <= s}


def test_induced_subgraph_example():
    h, mapping = induced_subgraph(cycle_graph(5), {0, 1, 2})
    assert h == path_graph(3) and mapping == (0, 1, 2)


def test_clique_and_stable():
    c5 = cycle_graph(5)
    assert is_clique(c5, {0, 1}) and not is_clique(c5, {0, 2})
    assert is_stable(c5, {0, 2}) and not is_stable(c5, {0, 1})
    assert is_clique(c5, set()) and is_stable(c5, set())


def test_connected():
    assert is_connected(path_graph(4))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(empty_graph(0))
    assert is_connected(cycle_graph(6), {0, 1, 2})
    assert not is_connected(cycle_graph(6), {0, 2})


def test_to_mask_validates_range():
    assert to_mask({0, 2}, 3) == 0b101
    with pytest.raises(ValueError):
        to_mask({3}, 3)


def test_chordless_paths_in_c5():
    c5 = cycle_graph(5)
    # adjacent ends: the edge is the only induced path (the long way round has a chord)
    assert list(chordless_paths_between(c5, 0, 1)) == [[0, 1]]
    assert sorted(chordless_paths_between(c5, 0, 2)) == [[0, 1, 2], [0, 4, 3, 2]]


def test_chordless_paths_rejects_bad_ends():
    with pytest.raises(ValueError):
        list(chordless_paths_between(path_graph(3), 1, 1))
    with pytest.raises(ValueError):
        list(chordless_paths_between(path_graph(3), 0, 5))


@given(graphs(min_n=2, max_n=7), st.data())
def test_chordless_paths_match_permutation_oracle(g, data):
    u, v = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    max_len = data.draw(st.one_of(st.none(), st.integers(1, 6)))
    got = sorted(chordless_paths_between(g, u, v, max_len))
    want = sorted(p for p in naive_chordless_paths(g, u, v)
                  if max_len is None or len(p) - 1 <= max_len)
    assert got == want
