import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount import (
    CSW_MISSING,
    GraphError,
    OuterplanarGraph,
    Tree,
    count_cycles,
    count_subtrees,
    enumerate_subtrees,
    inner_dual,
    inner_faces,
    is_cubic,
    is_inseparable,
    is_planar,
    min_subtree_counts,
    nonisomorphic_trees,
    path_tree,
    reduce,
    star_tree,
    subtree_count_spectrum,
    subtree_to_cycle,
    tree_canonical_string,
    tree_from_mgf,
    tree_to_outerplanar,
    trees_isomorphic,
    verify_bijection,
)
from cyclecount.treeduality import spectrum_complete_below
from oracles import subtree_count_brute


@st.composite
def random_trees(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    return Tree(n, tuple((draw(st.integers(0, v - 1)), v) for v in range(1, n)))


def test_tree_validation():
    with pytest.raises(GraphError):
        Tree(3, ((0, 1),))
    with pytest.raises(GraphError):
        Tree(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        tree_from_mgf("3 3\n0 1\n1 2\n2 0\n")


def test_subtree_counts_closed_forms():
    assert count_subtrees(path_tree(6)) == 21
    assert count_subtrees(star_tree(4)) == 2 ** 4 + 4


@given(random_trees(max_n=11))
def test_subtree_count_matches_brute_force(t):
    assert count_subtrees(t) == subtree_count_brute(t.n, t.edges)


@given(random_trees(max_n=10))
def test_enumerated_subtrees_are_distinct_and_connected(t):
    subs = enumerate_subtrees(t)
    assert len(subs) == len(set(subs)) == count_subtrees(t)
    g = nx.Graph(list(t.edges))
    g.add_nodes_from(range(t.n))
    assert all(nx.is_connected(g.subgraph(s)) for s in subs)


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_enumeration_matches_networkx(n):
    ours = nonisomorphic_trees(n)
    assert len(ours) == sum(1 for _ in nx.nonisomorphic_trees(n)) if n > 1 else len(ours) == 1
    assert len({tree_canonical_string(t) for t in ours}) == len(ours)


@settings(max_examples=60)
@given(random_trees(max_n=10), st.randoms(use_true_random=False))
def test_canonical_string_ignores_labels(t, rnd):
    sigma = list(range(t.n))
    rnd.shuffle(sigma)
    relabeled = Tree(t.n, tuple((sigma[u], sigma[v]) for u, v in t.edges))
    assert trees_isomorphic(t, relabeled)


def test_path_and_star_differ():
    assert not trees_isomorphic(path_tree(4), star_tree(3))


def _all_small_trees():
    return [t for n in range(2, 9) for t in nonisomorphic_trees(n)]


def test_forty_seven_trees_between_two_and_eight_vertices():
    expected = sum(sum(1 for _ in nx.nonisomorphic_trees(n)) for n in range(2, 9))
    assert len(_all_small_trees()) == expected == 47


@pytest.mark.parametrize("t", _all_small_trees(), ids=tree_canonical_string)
def test_outerplanar_construction(t):
    op, fm = tree_to_outerplanar(t)
    g = op.to_multigraph()
    assert is_inseparable(g) and is_planar(g, max_n=g.n)
    ends = [v for c in op.chords for v in c]
    assert len(ends) == len(set(ends))
    assert is_cubic(reduce(g).graph)
    assert trees_isomorphic(inner_dual(op), t)
    assert count_cycles(g) == count_subtrees(t)
    assert verify_bijection(t)


def test_face_map_realizes_the_tree():
    t = star_tree(3)
    op, fm = tree_to_outerplanar(t)
    chords = set(range(len(op.outer), len(op.outer) + len(op.chords)))
    for u, v in t.edges:
        shared = fm.faces[u] & fm.faces[v]
        assert len(shared) == 1 and shared <= chords


def test_inner_faces_of_a_fan():
    square = OuterplanarGraph((0, 1, 2, 3), ((0, 2),))
    faces = inner_faces(square)
    assert sorted(map(sorted, faces)) == [[0, 1, 4], [2, 3, 4]]


def test_crossing_chords_rejected():
    with pytest.raises(GraphError):
        inner_faces(OuterplanarGraph((0, 1, 2, 3), ((0, 2), (1, 3))))


def test_subtree_to_cycle_needs_connected_set():
    op, fm = tree_to_outerplanar(path_tree(3))
    with pytest.raises(GraphError):
        subtree_to_cycle(op, fm, {0, 2})


def test_construction_needs_an_edge():
    with pytest.raises(GraphError):
        tree_to_outerplanar(Tree(1))


def test_minimum_counts_are_path_counts():
    mins = min_subtree_counts(10)
    assert mins == {n: n * (n + 1) // 2 for n in range(1, 11)}
    assert spectrum_complete_below(10, mins) == 55


def test_spectrum_small():
    spec = subtree_count_spectrum(9)
    bound = spectrum_complete_below(9)
    missing = [c for c in range(1, bound + 1) if c not in spec]
    assert missing == [c for c in CSW_MISSING if c <= bound]


def test_spectrum_witnesses_have_their_counts():
    for c, t in subtree_count_spectrum(8).items():
        assert count_subtrees(t) == c


def test_random_large_tree_bijection():
    rnd = random.Random(7)
    for _ in range(5):
        n = 12
        t = Tree(n, tuple((rnd.randrange(v), v) for v in range(1, n)))
        assert verify_bijection(t)
