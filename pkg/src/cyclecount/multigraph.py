"""Multigraphs with loops and parallel edges.

Vertices are ``0..n-1``; each edge is an unordered pair stored as
``(min, max)`` and keeps a stable index given by its position in
``edges``.  All operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

__all__ = [
    "Multigraph",
    "ReducedClass",
    "GraphError",
    "MGFError",
    "SizeBoundError",
    "parse_mgf",
    "to_mgf",
    "to_dot",
    "subdivide",
    "reduce",
    "is_connected",
    "is_inseparable",
    "delete_edge",
    "contract_edge",
    "permute",
    "canonical_code",
    "from_code",
    "is_planar",
    "is_cubic",
    "is_hamiltonian",
    "theta",
    "cycle_graph",
    "loop_graph",
    "complete_graph",
    "necklace",
    "complete_bipartite",
]


class GraphError(ValueError):
    """Raised when an operation's precondition on its input graph fails."""


class MGFError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeBoundError(GraphError):
    pass


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def rank(self) -> int:
        """Cyclomatic number ``m - n + 1`` (meaningful for connected graphs)."""
        return self.m - self.n + 1

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex (a loop is listed once)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def multiplicity(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix of edge multiplicities; the diagonal counts loops."""
        a = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            a[u][v] += 1
            if u != v:
                a[v][u] += 1
        return tuple(tuple(row) for row in a)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Distinct non-loop neighbours of each vertex, ascending."""
        a = self.multiplicity
        return tuple(
            tuple(u for u in range(self.n) if u != v and a[v][u]) for v in range(self.n)
        )

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class ReducedClass:
    """Homeomorphism representative: min degree >= 3, or the one-vertex loop."""

    graph: Multigraph
    provenance: str | None = None


# -- construction ---------------------------------------------------------

def loop_graph() -> Multigraph:
    return Multigraph(1, ((0, 0),))


def theta(k: int) -> Multigraph:
    """Two vertices joined by ``k`` parallel edges."""
    return Multigraph(2, ((0, 1),) * k)


def cycle_graph(n: int) -> Multigraph:
    if n == 1:
        return loop_graph()
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def necklace(k: int) -> Multigraph:
    """A ring of ``k`` digons: the ``k``-cycle with every edge doubled."""
    return Multigraph(k, tuple((i, (i + 1) % k) for i in range(k) for _ in range(2)))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


# -- MGF / DOT ------------------------------------------------------------

def parse_mgf(text: bytes | str) -> Multigraph:
    """Parse the ``n m`` header plus ``m`` edge lines format.

    Lines starting with ``#`` are ignored.  Errors carry the 1-based line
    number where they were detected.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MGFError("input is not ASCII") from exc
    if text and not text.endswith("\n"):
        raise MGFError("missing trailing newline", text.count("\n") + 1)
    lines = [
        (i + 1, line) for i, line in enumerate(text.split("\n")[:-1])
        if not line.startswith("#")
    ]
    if not lines:
        raise MGFError("empty input", 1)

    def ints(lineno: int, line: str, what: str) -> tuple[int, int]:
        parts = line.split(" ")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MGFError(f"malformed {what} {line!r}", lineno)
        return int(parts[0]), int(parts[1])

    hline, header = lines[0]
    n, m = ints(hline, header, "header")
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else hline
        raise MGFError(f"header declares {m} edges but {len(body)} were given", last)
    edges = []
    for lineno, line in body:
        u, v = ints(lineno, line, "edge line")
        if u >= n or v >= n:
            raise MGFError(f"endpoint out of range 0..{n - 1}", lineno)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def to_mgf(g: Multigraph, comments: Iterable[str] = ()) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    out += [f"# {c}" for c in comments]
    return "\n".join(out) + "\n"


def to_dot(g: Multigraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f"  {v};" for v in range(g.n)]
    out += [f"  {u} -- {v};" for u, v in g.edges]
    out.append("}")
    return "\n".join(out) + "\n"


# -- homeomorphism --------------------------------------------------------

def subdivide(g: Multigraph, e: int, k: int = 1) -> Multigraph:
    """Replace edge ``e`` by a path of ``k + 1`` edges through new vertices.

    The new vertices are ``g.n .. g.n + k - 1`` in path order from the
    smaller endpoint.  Index ``e`` keeps the first piece and the remaining
    pieces are appended, so every other edge index is unchanged.
    """
    if not 0 <= e < g.m:
        raise GraphError(f"invalid edge index {e}")
    if k < 1:
        raise GraphError("subdivision count must be positive")
    u, v = g.edges[e]
    path = [u] + list(range(g.n, g.n + k)) + [v]
    edges = list(g.edges)
    edges[e] = (path[0], path[1])
    edges += [(path[i], path[i + 1]) for i in range(1, k + 1)]
    return Multigraph(g.n + k, tuple(edges))


def _relabel_drop(n: int, edges: Sequence[tuple[int, int]], dropped: set[int]) -> Multigraph:
    keep = [v for v in range(n) if v not in dropped]
    new = {v: i for i, v in enumerate(keep)}
    return Multigraph(len(keep), tuple((new[u], new[v]) for u, v in edges))


def is_connected(g: Multigraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    nbrs = g.neighbors
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def reduce(g: Multigraph) -> ReducedClass:
    """Suppress divalent vertices until none remain.

    A divalent vertex on a 2-cycle turns the cycle into a loop, so every
    cycle-like input ends as the one-vertex loop graph.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphError("reduce requires a connected graph")
    n = g.n
    edges = list(g.edges)
    removed: set[int] = set()
    changed = True
    steps = 0
    while changed:
        changed = False
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for x in range(n):
            if x in removed or deg[x] != 2:
                continue
            inc = [i for i, (u, v) in enumerate(edges) if u == x or v == x]
            if len(inc) != 2:
                continue  # a lone loop: x is the whole graph
            ends = []
            for i in inc:
                u, v = edges[i]
                ends.append(v if u == x else u)
            for i in sorted(inc, reverse=True):
                del edges[i]
            a, b = ends
            edges.append((min(a, b), max(a, b)))
            removed.add(x)
            steps += 1
            changed = True
            break
    out = _relabel_drop(n, edges, removed)
    note = f"suppressed {steps} divalent vertices" if steps else None
    return ReducedClass(out, note)


# -- structure ------------------------------------------------------------

def is_inseparable(g: Multigraph) -> bool:
    """Connected with no cutpoint; a loop at a vertex with another edge is a cutpoint."""
    if g.n == 0:
        return False
    if g.n == 1:
        return g.m <= 1
    if any(u == v for u, v in g.edges):
        return False
    if not is_connected(g):
        return False
    nbrs = g.neighbors
    for cut in range(g.n):
        start = 1 if cut == 0 else 0
        seen = {cut, start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in nbrs[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != g.n:
            return False
    return True


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    if not 0 <= e < g.m:
        raise GraphError(f"invalid edge index {e}")
    return Multigraph(g.n, g.edges[:e] + g.edges[e + 1:])


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    """Merge the endpoints of ``e``; contracting a loop deletes it.

    The merged vertex keeps the smaller label and later labels shift down.
    """
    if not 0 <= e < g.m:
        raise GraphError(f"invalid edge index {e}")
    u, v = g.edges[e]
    if u == v:
        return delete_edge(g, e)
    rest = [(u if a == v else a, u if b == v else b) for a, b in g.edges[:e] + g.edges[e + 1:]]
    return _relabel_drop(g.n, rest, {v})


def permute(g: Multigraph, sigma: Sequence[int]) -> Multigraph:
    """Relabel vertex ``v`` as ``sigma[v]``; edge order is kept."""
    if sorted(sigma) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex set")
    return Multigraph(g.n, tuple((sigma[u], sigma[v]) for u, v in g.edges))


# -- canonical form -------------------------------------------------------

def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; invariant under relabeling."""
    n = len(adj)
    while True:
        where = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        new_cells: list[list[int]] = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple(sorted((where[u], row[u]) for u in range(n) if row[u] and u != v))
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _encode(adj, order: Sequence[int]) -> bytes:
    n = len(order)
    out = bytearray([n])
    for i in range(n):
        row = adj[order[i]]
        for j in range(i, n):
            out.append(row[order[j]])
    return bytes(out)


def canonical_code(g: Multigraph, max_n: int = 14) -> bytes:
    """Canonical byte string: equal for two graphs iff they are isomorphic.

    Vertices are first split into an ordered equitable partition (degree,
    loops, then neighbour-cell multiplicities); the code is the bytewise
    minimum encoding of the multiplicity matrix over every labeling reached
    by individualization-refinement, which runs over all labelings
    compatible with that partition.
    """
    if g.n > max_n:
        raise SizeBoundError(f"canonical_code limited to n <= {max_n}, got {g.n}")
    adj = g.multiplicity
    if g.n == 0:
        return bytes([0])
    keyed: dict[tuple, list[int]] = {}
    for v in range(g.n):
        key = (g.degrees[v], adj[v][v], tuple(sorted(x for u, x in enumerate(adj[v]) if x and u != v)))
        keyed.setdefault(key, []).append(v)
    cells = _refine(adj, [keyed[k] for k in sorted(keyed)])

    best: bytes | None = None
    stack = [cells]
    while stack:
        part = stack.pop()
        target = next((i for i, c in enumerate(part) if len(c) > 1), None)
        if target is None:
            code = _encode(adj, [c[0] for c in part])
            if best is None or code < best:
                best = code
            continue
        cell = part[target]
        for v in cell:
            split = part[:target] + [[v], [u for u in cell if u != v]] + part[target + 1:]
            stack.append(_refine(adj, split))
    return best


def from_code(code: bytes) -> Multigraph:
    """Rebuild the canonically labeled graph encoded by :func:`canonical_code`."""
    n = code[0]
    edges = []
    k = 1
    for i in range(n):
        for j in range(i, n):
            edges += [(i, j)] * code[k]
            k += 1
    return Multigraph(n, tuple(edges))


# -- predicates -----------------------------------------------------------

def _check_bound(g: Multigraph, max_n: int, what: str) -> None:
    if g.n > max_n:
        raise SizeBoundError(f"{what} limited to n <= {max_n}, got {g.n}")


def is_planar(g: Multigraph, max_n: int = 16) -> bool:
    _check_bound(g, max_n, "is_planar")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v in g.edges if u != v)
    planar, _ = nx.check_planarity(h)
    return planar


def is_cubic(g: Multigraph) -> bool:
    return g.n > 0 and all(d == 3 for d in g.degrees)


def is_hamiltonian(g: Multigraph, max_n: int = 16) -> bool:
    """Whether some cycle passes through all ``n`` vertices."""
    _check_bound(g, max_n, "is_hamiltonian")
    a = g.multiplicity
    if g.n == 0:
        return False
    if g.n == 1:
        return a[0][0] > 0
    if g.n == 2:
        return a[0][1] >= 2
    nbrs = g.neighbors
    n = g.n
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def extend(v: int) -> bool:
        if len(path) == n:
            return a[v][0] > 0
        for u in nbrs[v]:
            if not on_path[u]:
                on_path[u] = True
                path.append(u)
                if extend(u):
                    return True
                path.pop()
                on_path[u] = False
        return False

    return extend(0)
