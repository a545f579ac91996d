import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclecount import (
    Anchor,
    EarError,
    Multigraph,
    add_ear,
    check_ear_path,
    check_extremality,
    check_isotonicity,
    complete_bipartite,
    complete_graph,
    contract_ear,
    count_cycles,
    count_cycles_oracle,
    cycle_graph,
    delete_ear,
    ear_extension_profile,
    find_ears,
    is_inseparable,
    reduce,
    subdivide,
    theta,
)
from cyclecount.ears import ANCHOR_KINDS, anchor_pairs, ear_delta
from oracles import isomorphic
from strategies import FRONTIER


def test_anchor_needs_exactly_one_target():
    with pytest.raises(ValueError):
        Anchor()
    with pytest.raises(ValueError):
        Anchor(vertex=0, edge=0)


def test_find_ears_partitions_edges():
    g = subdivide(complete_graph(4), 0, 2)
    ears = find_ears(g)
    assert sorted(e for ear in ears for e in ear.edges) == list(range(g.m))
    assert sorted(len(ear) for ear in ears) == [1, 1, 1, 1, 1, 3]
    long = next(ear for ear in ears if len(ear) == 3)
    assert set(long.ends) == {0, 1} and len(long.internal) == 2


def test_cycle_has_no_ears():
    with pytest.raises(EarError):
        find_ears(cycle_graph(4))


def test_add_ear_between_vertices():
    h, ends = add_ear(complete_graph(4), Anchor.at(0), Anchor.at(1))
    assert ends == (0, 1)
    assert count_cycles(h) == 7 + 5


def test_add_ear_with_length_subdivides():
    h, _ = add_ear(theta(3), Anchor.inside(0), Anchor.inside(1), length=3)
    assert h.n == 2 + 2 + 2
    assert count_cycles(h) == count_cycles_oracle(h)


def test_add_ear_rejects_coinciding_anchors():
    with pytest.raises(EarError):
        add_ear(theta(3), Anchor.at(0), Anchor.at(0))
    with pytest.raises(EarError):
        add_ear(theta(3), Anchor.at(0), Anchor.at(5))


def test_add_ear_needs_inseparable_host():
    bowtie = Multigraph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))
    with pytest.raises(EarError):
        add_ear(bowtie, Anchor.at(1), Anchor.at(3))


def test_delete_ear():
    g = complete_graph(4)
    ear = find_ears(g)[0]
    h = delete_ear(g, ear)
    assert h.m == 5 and is_inseparable(h)


# two digons sharing vertex 1, closed by the edge 0-2
DIGON_CHAIN = Multigraph(3, ((0, 1), (0, 1), (1, 2), (1, 2), (0, 2)))


def _closing_ear():
    return next(ear for ear in find_ears(DIGON_CHAIN) if set(ear.ends) == {0, 2})


def test_delete_ear_refuses_separable_result():
    with pytest.raises(EarError):
        delete_ear(DIGON_CHAIN, _closing_ear())


def test_contract_ear_of_theta():
    g = theta(3)
    h = contract_ear(g, find_ears(g)[0])
    assert h.n == 1 and h.m == 2
    assert count_cycles(h) == 2


def test_anchor_pairs_cover_every_kind():
    kinds = {k for k, _, _ in anchor_pairs(complete_graph(4))}
    assert kinds == set(ANCHOR_KINDS)


def test_theta_profile():
    profile = ear_extension_profile(theta(3))
    assert len(profile) == 4
    assert sorted({p.count for p in profile}) == [6, 7]


def test_k4_profile():
    profile = ear_extension_profile(complete_graph(4))
    assert sorted({p.count for p in profile}) == [12, 13, 14, 15]
    assert profile == sorted(profile, key=lambda p: (p.count, p.code))


def test_profile_entries_are_reduced_and_distinct():
    profile = ear_extension_profile(complete_graph(4))
    graphs = [p.graph for p in profile]
    assert all(min(g.degrees) >= 3 for g in graphs)
    assert not any(isomorphic(a, b) for i, a in enumerate(graphs) for b in graphs[i + 1:])
    assert all(count_cycles(p.graph) == p.count for p in profile)


def test_k33_smallest_extension():
    assert min(p.count for p in ear_extension_profile(complete_bipartite(3, 3))) == 24


def test_profile_undefined_for_cycle():
    with pytest.raises(EarError):
        ear_extension_profile(reduce(cycle_graph(3)))


@st.composite
def anchor_cases(draw):
    g = draw(st.sampled_from(FRONTIER))

    def anchor():
        if draw(st.booleans()):
            return Anchor.at(draw(st.integers(0, g.n - 1)))
        return Anchor.inside(draw(st.integers(0, g.m - 1)))

    a, b = anchor(), anchor()
    if a.vertex is not None and a.vertex == b.vertex:
        b = Anchor.inside(draw(st.integers(0, g.m - 1)))
    return g, a, b, draw(st.integers(1, 3))


@settings(max_examples=200)
@given(anchor_cases())
def test_ear_path_lemma(case):
    g, a, b, length = case
    assert check_ear_path(g, a, b, length)
    h, _ = add_ear(g, a, b, length)
    if h.m <= 16:
        assert count_cycles_oracle(h) == count_cycles(g) + ear_delta(g, a, b)


@pytest.mark.parametrize("g", FRONTIER, ids=lambda g: f"n{g.n}m{g.m}")
def test_extremality_and_isotonicity_on_frontier(g):
    assert all(check_extremality(g).values())
    assert all(check_isotonicity(g).values())


def test_contracting_a_separating_ear_keeps_the_count():
    h = contract_ear(DIGON_CHAIN, _closing_ear())
    assert count_cycles(h) == count_cycles(DIGON_CHAIN) == 6
    assert check_isotonicity(DIGON_CHAIN)["contraction_iff_separable"]
