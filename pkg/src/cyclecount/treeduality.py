"""Trees, subtree counts, and outerplanar graphs whose inner dual is a tree.

The cycles of an inseparable outerplanar graph correspond one-to-one with
the subtrees of its inner dual: a subtree maps to the symmetric
difference of the boundaries of its faces.  :func:`tree_to_outerplanar`
builds such a graph for any tree with at least two vertices, with chords
sharing no endpoints so that the reduced graph is cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .cycles import count_cycles, enumerate_cycles, is_cycle
from .multigraph import GraphError, Multigraph, SizeBoundError, parse_mgf

__all__ = [
    "Tree",
    "OuterplanarGraph",
    "FaceMap",
    "tree_from_mgf",
    "path_tree",
    "star_tree",
    "count_subtrees",
    "enumerate_subtrees",
    "tree_canonical_string",
    "trees_isomorphic",
    "nonisomorphic_trees",
    "tree_to_outerplanar",
    "inner_faces",
    "inner_dual",
    "subtree_to_cycle",
    "verify_bijection",
    "min_subtree_counts",
    "subtree_count_spectrum",
    "CSW_MISSING",
]

# integers that are not subtree counts of any tree (Czabarka, Szekely, Wagner)
CSW_MISSING = (
    2, 4, 5, 7, 8, 9, 12, 13, 14, 16, 18, 19, 22, 23, 26, 27, 29, 31, 33,
    35, 38, 39, 42, 43, 46, 50, 52, 54, 60, 65, 68, 72, 77, 89,
)

SUBTREE_ENUM_MAX_N = 20
SPECTRUM_MAX_N = 14


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        edges = tuple((u, v) if u <= v else (v, u) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise GraphError("a tree needs at least one vertex")
        if len(edges) != self.n - 1:
            raise GraphError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(edges)}")
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise GraphError("edges contain a cycle")
            parent[ru] = rv

    @property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def as_multigraph(self) -> Multigraph:
        return Multigraph(self.n, self.edges)


def tree_from_mgf(text: bytes | str) -> Tree:
    g = parse_mgf(text)
    return Tree(g.n, g.edges)


def path_tree(n: int) -> Tree:
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(leaves: int) -> Tree:
    return Tree(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


# -- subtrees -------------------------------------------------------------

def count_subtrees(t: Tree) -> int:
    """Number of nonempty vertex sets inducing a connected subgraph.

    Rooting at 0, ``rooted[v]`` counts the subtrees whose top vertex is
    ``v``: the product over children of ``1 + rooted[child]``.
    """
    adj = t.adjacency
    order = [0]
    parent = [-1] * t.n
    for v in order:
        for u in adj[v]:
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    rooted = [1] * t.n
    for v in reversed(order):
        if parent[v] >= 0:
            rooted[parent[v]] *= 1 + rooted[v]
    return sum(rooted)


def enumerate_subtrees(t: Tree) -> list[frozenset[int]]:
    """All subtrees as vertex sets, grouped by their smallest vertex."""
    if t.n > SUBTREE_ENUM_MAX_N:
        raise SizeBoundError(f"subtree enumeration limited to n <= {SUBTREE_ENUM_MAX_N}")
    adj = t.adjacency
    out: list[frozenset[int]] = []

    def grow(root: int, chosen: frozenset[int], frontier: list[int], banned: frozenset[int]):
        out.append(chosen)
        banned = set(banned)
        for i, w in enumerate(frontier):
            nxt = frontier[i + 1:] + [
                u for u in adj[w]
                if u > root and u not in chosen and u not in banned and u not in frontier
            ]
            grow(root, chosen | {w}, nxt, frozenset(banned))
            banned.add(w)

    for r in range(t.n):
        grow(r, frozenset([r]), [u for u in adj[r] if u > r], frozenset())
    return out


# -- tree isomorphism and generation --------------------------------------

def _centers(t: Tree) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    adj = t.adjacency
    deg = [len(a) for a in adj]
    layer = [v for v in range(t.n) if deg[v] == 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_string(adj: list[list[int]], root: int) -> str:
    def enc(v: int, parent: int) -> str:
        return "(" + "".join(sorted(enc(u, v) for u in adj[v] if u != parent)) + ")"

    return enc(root, -1)


def tree_canonical_string(t: Tree) -> str:
    """Nested-parenthesis encoding rooted at the center (least of two at a bicenter)."""
    adj = t.adjacency
    return min(_rooted_string(adj, c) for c in _centers(t))


def trees_isomorphic(s: Tree, t: Tree) -> bool:
    return s.n == t.n and tree_canonical_string(s) == tree_canonical_string(t)


def _tree_from_string(code: str) -> Tree:
    edges = []
    stack: list[int] = []
    n = 0
    for ch in code:
        if ch == "(":
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
            n += 1
        else:
            stack.pop()
    return Tree(n, tuple(edges))


def nonisomorphic_trees(n: int) -> list[Tree]:
    """One tree per isomorphism class on ``n`` vertices, sorted by canonical string.

    Trees on ``n`` vertices are the trees on ``n - 1`` vertices with one
    leaf attached, so each level extends the previous one and keeps one
    representative per canonical string.
    """
    if n < 1:
        return []
    level = {"()": Tree(1)}
    for size in range(2, n + 1):
        nxt: dict[str, Tree] = {}
        for t in level.values():
            for v in range(t.n):
                child = Tree(size, t.edges + ((v, t.n),))
                key = tree_canonical_string(child)
                if key not in nxt:
                    nxt[key] = _tree_from_string(key)
        level = nxt
    return [level[k] for k in sorted(level)]


# -- outerplanar duality --------------------------------------------------

@dataclass(frozen=True)
class OuterplanarGraph:
    """Outer Hamiltonian cycle in circular order plus chords.

    As a multigraph, edge ``i < len(outer)`` joins ``outer[i]`` to
    ``outer[i + 1]`` (cyclically); chords follow in the given order.
    """

    outer: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    def to_multigraph(self) -> Multigraph:
        k = len(self.outer)
        ring = tuple((self.outer[i], self.outer[(i + 1) % k]) for i in range(k))
        return Multigraph(k, ring + self.chords)


@dataclass(frozen=True)
class FaceMap:
    """Inner faces (edge sets of the outerplanar multigraph) indexed by tree vertex."""

    tree: Tree
    faces: tuple[frozenset[int], ...]


def tree_to_outerplanar(t: Tree) -> tuple[OuterplanarGraph, FaceMap]:
    """Outerplanar graph with non-adjacent chords whose inner dual is ``t``.

    Start from a triangle whose single face belongs to vertex 0.  Each
    further vertex ``w`` (breadth-first, so its parent ``v`` is placed)
    gets three new outer vertices ``p, x, q`` inserted inside an outer edge
    of ``v``'s face and the chord ``p q``; the region cut off by the chord
    becomes ``w``'s face.
    """
    if t.n < 2:
        raise GraphError("need a tree with at least two vertices")
    adj = t.adjacency
    order = [0]
    parent = [-1] * t.n
    for v in order:
        for u in adj[v]:
            if u != parent[v] and u != 0:
                parent[u] = v
                order.append(u)

    ring = [0, 1, 2]
    label = 3
    chords: list[tuple[int, int]] = []
    side: dict[int, tuple[int, int]] = {0: (0, 1)}  # an outer edge of each face
    for w in order[1:]:
        a, b = side[parent[w]]
        p, x, q = label, label + 1, label + 2
        label += 3
        i = ring.index(a)
        ring[i + 1:i + 1] = [p, x, q]
        chords.append((p, q))
        side[parent[w]] = (a, p)
        side[w] = (p, x)

    pos = {v: i for i, v in enumerate(ring)}
    op = OuterplanarGraph(
        tuple(range(len(ring))),
        tuple((pos[u], pos[v]) for u, v in chords),
    )
    faces = inner_faces(op)
    k = len(ring)
    faces_of_edge: dict[int, frozenset[int]] = {}
    for f in faces:
        for e in f:
            if e < k:
                faces_of_edge[e] = f
    by_vertex = []
    for v in range(t.n):
        a, b = side[v]
        by_vertex.append(faces_of_edge[pos[a]])
    return op, FaceMap(t, tuple(by_vertex))


def inner_faces(op: OuterplanarGraph) -> list[frozenset[int]]:
    """Edge sets of the bounded faces, found by one sweep over the outer cycle.

    A chord closes a face when the sweep reaches its right end; the face
    consists of everything stacked since its left end.  Crossing chords
    break this nesting and raise :class:`GraphError`.
    """
    k = len(op.outer)
    pos = {v: i for i, v in enumerate(op.outer)}
    if len(pos) != k or k < 2:
        raise GraphError("outer cycle must list at least two distinct vertices")
    closing: dict[int, list[tuple[int, int]]] = {}
    for c, (u, v) in enumerate(op.chords):
        i, j = sorted((pos[u], pos[v]))
        if i == j:
            raise GraphError("a chord cannot be a loop")
        closing.setdefault(j, []).append((i, k + c))
    faces = []
    stack: list[tuple[int, int]] = []  # (left position, edge index)
    for j in range(1, k):
        stack.append((j - 1, j - 1))
        for i, e in sorted(closing.get(j, []), reverse=True):
            face = {e}
            while stack and stack[-1][0] >= i:
                left, f = stack.pop()
                face.add(f)
                reach = left
            if reach != i:
                raise GraphError("chords cross")
            faces.append(frozenset(face))
            stack.append((i, e))
    last = {f for _, f in stack} | {k - 1}
    if stack and stack[0][0] != 0:
        raise GraphError("chords cross")
    faces.append(frozenset(last))
    return faces


def inner_dual(op: OuterplanarGraph) -> Tree:
    """Tree with a vertex per inner face, adjacent when faces share a chord."""
    faces = inner_faces(op)
    owner: dict[int, list[int]] = {}
    for i, f in enumerate(faces):
        for e in f:
            owner.setdefault(e, []).append(i)
    edges = tuple(tuple(fs) for e, fs in sorted(owner.items()) if len(fs) == 2)
    return Tree(len(faces), edges)


def _is_connected_subset(t: Tree, s: frozenset[int]) -> bool:
    if not s:
        return False
    adj = t.adjacency
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in s and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(s)


def subtree_to_cycle(op: OuterplanarGraph, fm: FaceMap, s: Iterable[int]) -> frozenset[int]:
    """Symmetric difference of the face boundaries over the subtree ``s``."""
    s = frozenset(s)
    if not _is_connected_subset(fm.tree, s):
        raise GraphError("vertex set is not a subtree")
    acc: frozenset[int] = frozenset()
    for v in s:
        acc = acc ^ fm.faces[v]
    return acc


def verify_bijection(t: Tree) -> bool:
    """Check that subtrees of ``t`` map onto the cycles of its outerplanar graph."""
    op, fm = tree_to_outerplanar(t)
    g = op.to_multigraph()
    images = [subtree_to_cycle(op, fm, s) for s in enumerate_subtrees(t)]
    if not all(is_cycle(g, c) for c in images):
        return False
    if len(set(images)) != len(images):
        return False
    if len(images) != count_cycles(g) or len(images) != count_subtrees(t):
        return False
    return set(images) == set(enumerate_cycles(g))


# -- subtree count spectrum -----------------------------------------------

def _all_trees(max_n: int) -> Iterator[Tree]:
    for n in range(1, max_n + 1):
        yield from nonisomorphic_trees(n)


def min_subtree_counts(max_n: int) -> dict[int, int]:
    """Smallest subtree count among ``n``-vertex trees, for each ``n <= max_n``."""
    out: dict[int, int] = {}
    for t in _all_trees(max_n):
        c = count_subtrees(t)
        out[t.n] = min(out.get(t.n, c), c)
    return out


def subtree_count_spectrum(max_n: int) -> dict[int, Tree]:
    """Map each subtree count reached by a tree with ``<= max_n`` vertices to a witness.

    The witness is the first tree found in order of ``(n, canonical string)``.
    """
    if max_n > SPECTRUM_MAX_N:
        raise SizeBoundError(f"spectrum limited to max_n <= {SPECTRUM_MAX_N}")
    out: dict[int, Tree] = {}
    for t in _all_trees(max_n):
        out.setdefault(count_subtrees(t), t)
    return out


def spectrum_complete_below(max_n: int, mins: dict[int, int] | None = None) -> int:
    """Largest ``B`` such that every tree with subtree count ``<= B`` has ``<= max_n`` vertices.

    Removing a leaf strictly lowers the subtree count, so the minimum count
    over ``n``-vertex trees increases with ``n`` and every larger tree has
    more than ``mins[max_n]`` subtrees.  ``mins`` (from
    :func:`min_subtree_counts`) is checked against the path count
    ``n (n + 1) / 2`` before it is trusted.
    """
    if mins is None:
        mins = min_subtree_counts(max_n)
    for n in range(1, max_n + 1):
        if mins.get(n) != n * (n + 1) // 2:
            raise AssertionError(f"minimum subtree count for n={n} is {mins.get(n)}, not the path count")
    return mins[max_n]
