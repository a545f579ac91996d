import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount import (
    GraphError,
    Multigraph,
    SizeBoundError,
    complete_bipartite,
    complete_graph,
    count_cycles,
    count_cycles_oracle,
    count_st_paths,
    cycle_graph,
    enumerate_cycles,
    is_cycle,
    loop_graph,
    necklace,
    theta,
)
from strategies import connected_multigraphs, subdivided_frontier


@pytest.mark.parametrize(
    "graph, expected",
    [
        (loop_graph(), 1),
        (cycle_graph(7), 1),
        (theta(5), 10),
        (complete_graph(4), 7),
        (complete_graph(5), 37),
        (complete_graph(6), 197),
        (complete_bipartite(3, 3), 15),
        (necklace(4), 20),
        (Multigraph(1, ((0, 0),) * 3), 3),
        (Multigraph(2, ((0, 1),) * 4), 6),
    ],
)
def test_known_counts(graph, expected):
    assert count_cycles(graph) == expected


@pytest.mark.parametrize("k", range(2, 7))
def test_necklace_formula(k):
    assert count_cycles(necklace(k)) == k + 2 ** k


def test_tree_has_no_cycles():
    assert count_cycles(Multigraph(4, ((0, 1), (1, 2), (1, 3)))) == 0


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        count_cycles(Multigraph(2, ()))


@settings(max_examples=150)
@given(connected_multigraphs(max_n=7, max_extra=9))
def test_counter_matches_oracle(g):
    assert count_cycles(g) == count_cycles_oracle(g)


@given(subdivided_frontier())
def test_subdivision_preserves_count(g):
    assert count_cycles(g) == count_cycles_oracle(g)


@given(connected_multigraphs(max_n=6, max_extra=7))
def test_enumeration_lists_every_cycle_once(g):
    cycles = enumerate_cycles(g)
    assert len(cycles) == len(set(cycles)) == count_cycles(g)
    assert all(is_cycle(g, c) for c in cycles)


def test_is_cycle():
    g = theta(3)
    assert is_cycle(g, {0, 1})
    assert not is_cycle(g, {0, 1, 2})
    assert not is_cycle(g, set())
    two_triangles = Multigraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)))
    assert not is_cycle(two_triangles, {0, 1, 2, 3, 4, 5})


def test_oracle_size_bound():
    with pytest.raises(SizeBoundError):
        count_cycles_oracle(complete_graph(8))


def test_path_counts():
    assert count_st_paths(complete_graph(4), 0, 1) == 5
    assert count_st_paths(complete_bipartite(3, 3), 0, 3) == 9
    assert count_st_paths(theta(4), 0, 1) == 4


def test_path_endpoints_must_differ():
    with pytest.raises(GraphError):
        count_st_paths(theta(3), 0, 0)


@given(connected_multigraphs(max_n=6, max_extra=7), st.data())
def test_paths_match_networkx(g, data):
    if g.n < 2:
        return
    s, t = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(e for e in g.edges if e[0] != e[1])
    expected = sum(1 for _ in nx.all_simple_edge_paths(h, s, t))
    assert count_st_paths(g, s, t) == expected
