"""Ears: locating, adding, deleting and contracting them.

An ear is a path with distinct endpoints of degree > 2 whose internal
vertices have degree 2.  New ears may be attached at existing vertices or
at points strictly inside an edge (an :class:`Anchor`); such points are
realized by subdividing the edge first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .cycles import count_cycles, count_st_paths
from .multigraph import (
    GraphError,
    Multigraph,
    ReducedClass,
    _relabel_drop,
    canonical_code,
    delete_edge,
    is_inseparable,
    reduce,
    subdivide,
)

__all__ = [
    "Ear",
    "Anchor",
    "EarError",
    "ProfileEntry",
    "find_ears",
    "add_ear",
    "delete_ear",
    "contract_ear",
    "single_ear_extensions",
    "ear_extension_profile",
    "check_extremality",
    "check_ear_path",
    "check_isotonicity",
]

VERTEX_VERTEX = "vertex-vertex"
VERTEX_EDGE = "vertex-edge"
SAME_EDGE = "same-edge"
DIFFERENT_EDGE = "different-edge"
ANCHOR_KINDS = (VERTEX_VERTEX, VERTEX_EDGE, SAME_EDGE, DIFFERENT_EDGE)


class EarError(GraphError):
    pass


@dataclass(frozen=True)
class Ear:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]  # path order, endpoints first and last

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Anchor:
    """Attachment point: a vertex, or a point strictly inside an edge."""

    vertex: int | None = None
    edge: int | None = None

    def __post_init__(self):
        if (self.vertex is None) == (self.edge is None):
            raise ValueError("an anchor is either a vertex or an edge interior")

    @classmethod
    def at(cls, v: int) -> "Anchor":
        return cls(vertex=v)

    @classmethod
    def inside(cls, e: int) -> "Anchor":
        return cls(edge=e)


def find_ears(g: Multigraph) -> list[Ear]:
    """Partition the edges of an inseparable non-cycle graph into maximal ears."""
    deg = g.degrees
    multi = [v for v in range(g.n) if deg[v] > 2]
    if not multi:
        raise EarError("a cycle has no multivalent vertex and no ears")
    used = [False] * g.m
    ears = []
    for start in multi:
        for e0 in g.incidence[start]:
            if used[e0]:
                continue
            verts = [start]
            es = []
            e, v = e0, start
            while True:
                used[e] = True
                es.append(e)
                v = g.other_end(e, v)
                verts.append(v)
                if deg[v] != 2:
                    break
                e = next(x for x in g.incidence[v] if not used[x])
            if verts[0] == verts[-1]:
                raise EarError(f"vertex {start} is a cutpoint; the graph is separable")
            ears.append(Ear(tuple(es), tuple(verts)))
    return ears


def _resolve(g: Multigraph, a: Anchor, b: Anchor) -> tuple[Multigraph, int, int]:
    for anc in (a, b):
        if anc.vertex is not None and not 0 <= anc.vertex < g.n:
            raise EarError(f"anchor vertex {anc.vertex} out of range")
        if anc.edge is not None and not 0 <= anc.edge < g.m:
            raise EarError(f"anchor edge {anc.edge} out of range")
    h = g
    if b.edge is not None:
        h = subdivide(h, b.edge)
        vb = h.n - 1
    else:
        vb = b.vertex
    if a.edge is not None:
        h = subdivide(h, a.edge)
        va = h.n - 1
    else:
        va = a.vertex
    if va == vb:
        raise EarError("ear anchors coincide")
    return h, va, vb


def _attach(h: Multigraph, va: int, vb: int, length: int) -> Multigraph:
    path = [va] + list(range(h.n, h.n + length - 1)) + [vb]
    return Multigraph(h.n + length - 1, h.edges + tuple(zip(path, path[1:])))


def add_ear(
    g: Multigraph, a: Anchor, b: Anchor, length: int = 1
) -> tuple[Multigraph, tuple[int, int]]:
    """Attach a new ear of ``length`` edges between two anchors.

    Edge anchors are subdivided, ``b`` before ``a``.  Returns the new graph
    together with the ear's endpoint labels in it.
    """
    if length < 1:
        raise EarError("ear length must be positive")
    if not is_inseparable(g):
        raise EarError("ears are only added to inseparable graphs")
    h, va, vb = _resolve(g, a, b)
    return _attach(h, va, vb, length), (va, vb)


def ear_delta(g: Multigraph, a: Anchor, b: Anchor) -> int:
    """Cycles created by attaching an ear at ``a``, ``b``: the paths between them."""
    h, va, vb = _resolve(g, a, b)
    return count_st_paths(h, va, vb)


def _remove_ear(g: Multigraph, ear: Ear) -> Multigraph:
    drop = set(ear.edges)
    rest = [e for i, e in enumerate(g.edges) if i not in drop]
    return _relabel_drop(g.n, rest, set(ear.internal))


def delete_ear(g: Multigraph, ear: Ear) -> Multigraph:
    """Remove the ear's edges and internal vertices; the remainder must stay inseparable."""
    h = _remove_ear(g, ear)
    if not is_inseparable(h):
        raise EarError("deleting this ear leaves a separable graph")
    return h


def contract_ear(g: Multigraph, ear: Ear) -> Multigraph:
    """Contract every edge of the ear, merging its vertices into its first endpoint."""
    u = ear.vertices[0]
    merged = set(ear.vertices)
    drop = set(ear.edges)
    rest = [
        (u if x in merged else x, u if y in merged else y)
        for i, (x, y) in enumerate(g.edges)
        if i not in drop
    ]
    return _relabel_drop(g.n, rest, merged - {u})


# -- one-ear extensions ---------------------------------------------------

def anchor_pairs(g: Multigraph) -> Iterator[tuple[str, Anchor, Anchor]]:
    """All placements of one new ear on ``g`` up to homeomorphism of the result."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            yield VERTEX_VERTEX, Anchor.at(u), Anchor.at(v)
    for v in range(g.n):
        for e in range(g.m):
            yield VERTEX_EDGE, Anchor.at(v), Anchor.inside(e)
    for e in range(g.m):
        yield SAME_EDGE, Anchor.inside(e), Anchor.inside(e)
        for f in range(e + 1, g.m):
            yield DIFFERENT_EDGE, Anchor.inside(e), Anchor.inside(f)


def single_ear_extensions(g: Multigraph, max_count: int | None = None, base_count: int | None = None):
    """Yield ``(kind, a, b, count, child)`` for every one-ear extension of ``g``.

    ``count`` is obtained from the parent count plus the number of paths
    between the anchors.  With ``max_count`` set, children above it are
    skipped before the (comparatively costly) graph is built.
    """
    if base_count is None:
        base_count = count_cycles(g)
    for kind, a, b in anchor_pairs(g):
        h, va, vb = _resolve(g, a, b)
        count = base_count + count_st_paths(h, va, vb)
        if max_count is not None and count > max_count:
            continue
        yield kind, a, b, count, _attach(h, va, vb, 1)


@dataclass(frozen=True)
class ProfileEntry:
    code: bytes
    count: int
    kinds: frozenset[str] = field(default_factory=frozenset)
    graph: Multigraph | None = field(default=None, compare=False)


def _as_graph(g: Multigraph | ReducedClass) -> Multigraph:
    return g.graph if isinstance(g, ReducedClass) else g


def ear_extension_profile(g: Multigraph | ReducedClass) -> list[ProfileEntry]:
    """Homeomorphism-distinct one-ear extensions of ``g`` with their cycle counts.

    Results are keyed by the canonical code of the reduced extension and
    sorted by ``(count, code)``.
    """
    g = _as_graph(g)
    if max(g.degrees, default=0) <= 2:
        raise EarError("profile undefined for the cycle class")
    found: dict[bytes, tuple[int, set[str], Multigraph]] = {}
    for kind, _, _, count, child in single_ear_extensions(g):
        red = reduce(child).graph
        code = canonical_code(red, max_n=max(14, red.n))
        if code in found:
            found[code][1].add(kind)
        else:
            found[code] = (count, {kind}, red)
    entries = [ProfileEntry(code, c, frozenset(k), r) for code, (c, k, r) in found.items()]
    return sorted(entries, key=lambda p: (p.count, p.code))


def check_extremality(g: Multigraph | ReducedClass) -> dict[str, bool]:
    """Check the three extremal placements of a new ear on a reduced graph.

    ``max_at_interiors``: the largest count is reached with both anchors
    inside different edges.  ``min_at_vertices``: the smallest is reached
    at a pair of (multivalent) vertices.  ``same_ear_equals_ends``: any
    placement with both anchors on one edge, or a vertex and an interior
    point of an edge at that vertex, matches attaching at the edge's ends.
    """
    g = _as_graph(g)
    base = count_cycles(g)
    by_kind: dict[str, list[int]] = {k: [] for k in ANCHOR_KINDS}
    same_ok = True
    for kind, a, b in anchor_pairs(g):
        h, va, vb = _resolve(g, a, b)
        count = base + count_st_paths(h, va, vb)
        by_kind[kind].append(count)
        on_one_edge = kind == SAME_EDGE or (
            kind == VERTEX_EDGE and a.vertex in g.edges[b.edge]
        )
        if on_one_edge:
            e = b.edge
            x, y = g.edges[e]
            ends = base + count_st_paths(g, x, y) if x != y else None
            same_ok &= ends == count
    every = [c for cs in by_kind.values() for c in cs]
    return {
        "max_at_interiors": bool(by_kind[DIFFERENT_EDGE]) and max(by_kind[DIFFERENT_EDGE]) == max(every),
        "min_at_vertices": bool(by_kind[VERTEX_VERTEX]) and min(by_kind[VERTEX_VERTEX]) == min(every),
        "same_ear_equals_ends": same_ok,
    }


def check_ear_path(g: Multigraph, a: Anchor, b: Anchor, length: int = 1) -> bool:
    """New cycles from an ear at ``a``, ``b`` equal the paths between the anchors."""
    h, ends = add_ear(g, a, b, length)
    return count_cycles(h) - count_cycles(g) == ear_delta(g, a, b)


def check_isotonicity(g: Multigraph) -> dict[str, bool]:
    """Deletion and ear contraction checks on an inseparable non-cycle graph.

    ``deletion_decreases``: removing any edge loses at least one cycle.
    ``contraction_iff_separable``: contracting an ear keeps the count
    exactly when removing that ear leaves a separable graph.
    """
    c = count_cycles(g)
    dec = True
    for e in range(g.m):
        dec &= count_cycles(delete_edge(g, e)) < c
    iff = True
    for ear in find_ears(g):
        same = count_cycles(contract_ear(g, ear)) == c
        iff &= same == (not is_inseparable(_remove_ear(g, ear)))
    return {"deletion_decreases": dec, "contraction_iff_separable": iff}
