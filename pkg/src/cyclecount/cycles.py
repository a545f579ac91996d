"""Cycle counting and enumeration in multigraphs.

A cycle is a nonempty connected edge set in which every touched vertex
has degree exactly 2.  Loops are cycles of length 1 and a pair of
parallel edges is a cycle of length 2.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

import numpy as np

from .multigraph import GraphError, Multigraph, SizeBoundError, is_connected

__all__ = [
    "count_cycles",
    "count_cycles_oracle",
    "enumerate_cycles",
    "count_st_paths",
    "is_cycle",
]

ORACLE_MAX_EDGES = 24


def _require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise GraphError("cycle counting requires a connected graph")


def count_cycles(g: Multigraph) -> int:
    """Number of cycles of ``g``.

    Loops and parallel pairs are counted in closed form; longer cycles are
    found by backtracking over vertex paths rooted at their smallest
    vertex, weighting each by the product of edge multiplicities.  Each
    such vertex cycle is reached once per direction.
    """
    _require_connected(g)
    a = g.multiplicity
    n = g.n
    total = sum(a[v][v] for v in range(n))
    total += sum(comb(a[u][v], 2) for u in range(n) for v in range(u + 1, n))

    nbrs = g.neighbors
    twice = 0
    on_path = [False] * n
    for root in range(n):
        on_path[root] = True
        stack = [(root, 1, 0, iter(u for u in nbrs[root] if u > root))]
        while stack:
            v, weight, depth, it = stack[-1]
            u = next(it, None)
            if u is None:
                stack.pop()
                on_path[v] = False
                continue
            if on_path[u]:
                continue
            w = weight * a[v][u]
            if depth >= 1 and a[u][root]:
                twice += w * a[u][root]
            on_path[u] = True
            stack.append((u, w, depth + 1, iter(x for x in nbrs[u] if x > root)))
        on_path[root] = False
    return total + twice // 2


def enumerate_cycles(g: Multigraph) -> list[frozenset[int]]:
    """Every cycle as a frozenset of edge indices, in a deterministic order."""
    _require_connected(g)
    n = g.n
    between: dict[tuple[int, int], list[int]] = {}
    out: list[frozenset[int]] = []
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            out.append(frozenset([i]))
        else:
            between.setdefault((u, v), []).append(i)
    for es in between.values():
        out += [frozenset(p) for p in combinations(es, 2)]

    def edge_choices(path: list[int]):
        hops = [between[(min(x, y), max(x, y))] for x, y in zip(path, path[1:] + path[:1])]
        return [frozenset(c) for c in product(*hops)]

    nbrs = g.neighbors

    def extend(path: list[int], on_path: set[int]) -> None:
        root = path[0]
        v = path[-1]
        for u in nbrs[v]:
            if u <= root or u in on_path:
                continue
            path.append(u)
            # each vertex cycle once: second vertex < last vertex
            if len(path) >= 3 and root in nbrs[u] and path[1] < u:
                out.extend(edge_choices(path))
            on_path.add(u)
            extend(path, on_path)
            on_path.discard(u)
            path.pop()

    for root in range(n):
        extend([root], {root})
    return out


def is_cycle(g: Multigraph, edge_set) -> bool:
    """Whether ``edge_set`` is connected and 2-regular on the vertices it touches."""
    edge_set = set(edge_set)
    if not edge_set:
        return False
    deg: dict[int, int] = {}
    for e in edge_set:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    parent = {v: v for v in deg}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_set:
        u, v = g.edges[e]
        parent[find(u)] = find(v)
    return len({find(v) for v in deg}) == 1


def count_cycles_oracle(g: Multigraph, chunk: int = 1 << 16) -> int:
    """Ground-truth count by scanning every nonempty edge subset.

    Degrees of all subsets are computed in vectorized chunks; only subsets
    with every degree in {0, 2} are checked for connectivity.
    """
    _require_connected(g)
    m = g.m
    if m > ORACLE_MAX_EDGES:
        raise SizeBoundError(f"oracle limited to {ORACLE_MAX_EDGES} edges, got {m}")
    if m == 0:
        return 0
    weights = np.zeros((g.n, m), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        weights[u, i] += 1
        weights[v, i] += 1
    shifts = np.arange(m, dtype=np.int64)
    total = 0
    for start in range(1, 1 << m, chunk):
        masks = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        bits = (masks[:, None] >> shifts[None, :]) & 1
        deg = bits @ weights.T
        ok = np.all((deg == 0) | (deg == 2), axis=1)
        for mask in masks[ok]:
            mask = int(mask)
            if is_cycle(g, [i for i in range(m) if mask >> i & 1]):
                total += 1
    return total


def count_st_paths(g: Multigraph, s: int, t: int) -> int:
    """Number of simple paths from ``s`` to ``t``; parallel edges count separately."""
    if s == t:
        raise GraphError("path endpoints must differ")
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise GraphError("path endpoint out of range")
    _require_connected(g)
    a = g.multiplicity
    nbrs = g.neighbors
    on_path = [False] * g.n
    on_path[s] = True
    total = 0
    stack = [(s, 1, iter(nbrs[s]))]
    while stack:
        v, weight, it = stack[-1]
        u = next(it, None)
        if u is None:
            stack.pop()
            on_path[v] = False
            continue
        if on_path[u]:
            continue
        w = weight * a[v][u]
        if u == t:
            total += w
            continue
        on_path[u] = True
        stack.append((u, w, iter(nbrs[u])))
    return total
