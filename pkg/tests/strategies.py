"""Hypothesis strategies for random multigraphs."""

from hypothesis import strategies as st

from cyclecount import Multigraph
from cyclecount.search import generate_frontier

FRONTIER = [cls.graph for r in range(2, 5) for cls in generate_frontier(r).classes.values()]


@st.composite
def connected_multigraphs(draw, max_n=7, max_extra=8):
    n = draw(st.integers(1, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_extra))
    return Multigraph(n, tuple(edges + extra))


@st.composite
def subdivided_frontier(draw, max_splits=4):
    g = draw(st.sampled_from(FRONTIER))
    edges = list(g.edges)
    n = g.n
    for _ in range(draw(st.integers(0, max_splits))):
        i = draw(st.integers(0, len(edges) - 1))
        u, v = edges[i]
        edges[i] = (u, n)
        edges.append((n, v))
        n += 1
    return Multigraph(n, tuple(edges))


@st.composite
def permutations(draw, n):
    return draw(st.permutations(range(n)))
