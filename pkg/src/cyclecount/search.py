"""Isomorph-free generation of reduced inseparable multigraphs and witness tables.

Every inseparable graph other than a cycle is a smaller inseparable graph
plus one ear, so the reduced classes of cyclomatic rank ``r + 1`` are the
reduced one-ear extensions of the rank-``r`` classes.  Adding an ear
strictly increases the cycle count, which lets a count bound prune the
generation without losing any class under the bound.
"""

from __future__ import annotations

import json
import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .cycles import count_cycles, count_cycles_oracle
from .ears import (
    DIFFERENT_EDGE,
    SAME_EDGE,
    VERTEX_EDGE,
    VERTEX_VERTEX,
    Anchor,
    _attach,
    _resolve,
    anchor_pairs,
)
from .multigraph import (
    Multigraph,
    ReducedClass,
    canonical_code,
    from_code,
    is_cubic,
    is_hamiltonian,
    is_planar,
    loop_graph,
    reduce,
    theta,
    to_mgf,
)

__all__ = [
    "GenerationFrontier",
    "WitnessRecord",
    "Certificate",
    "SearchLimitError",
    "FILTERS",
    "max_rank",
    "generate_frontier",
    "bounded_frontiers",
    "min_cycles_by_rank",
    "witness_search",
    "prove_nonexistence",
    "nonplanar_classification",
    "cubic_classes",
    "cubic_planar_minimum_order",
    "oeis_prefix",
    "table_to_json",
]

log = logging.getLogger(__name__)

FILTERS = ("cubic", "planar", "hamiltonian")
DEFAULT_MAX_RANK = 6
HARD_MAX_RANK = 8
COMPLETE_WITNESS_RANK = 7
CUBIC_MAX_N = 14
TARGET_BATCH = 1000
CANON_MAX_N = 30
EXCEPTIONS = {
    "A385523": (2, 4, 5, 8, 9, 16),
    "A385524": (1, 2, 4, 5, 8, 9, 13, 16),
}


class SearchLimitError(ValueError):
    pass


def max_rank() -> int:
    """Rank cap for complete frontiers; ``CYCLECOUNT_MAX_RANK`` may change it."""
    raw = os.environ.get("CYCLECOUNT_MAX_RANK")
    if raw is None:
        return DEFAULT_MAX_RANK
    cap = int(raw)
    if cap > HARD_MAX_RANK:
        raise SearchLimitError(f"CYCLECOUNT_MAX_RANK={cap} exceeds the hard limit {HARD_MAX_RANK}")
    if cap > DEFAULT_MAX_RANK:
        warnings.warn(
            f"rank cap raised to {cap}: rank 7 takes about a minute, rank 8 far longer",
            ResourceWarning,
            stacklevel=2,
        )
    return cap


@dataclass(frozen=True)
class GenerationFrontier:
    rank: int
    classes: dict[bytes, ReducedClass]
    counts: dict[bytes, int]

    def __len__(self) -> int:
        return len(self.classes)


# -- one-ear expansion ------------------------------------------------------

class _Over(Exception):
    pass


def _path_count(a: list[list[int]], s: int, t: int, limit: int | None) -> int:
    size = len(a)
    on = [False] * size
    on[s] = True
    total = 0

    def walk(v: int, weight: int) -> None:
        nonlocal total
        row = a[v]
        for u in range(size):
            k = row[u]
            if not k or on[u]:
                continue
            if u == t:
                total += weight * k
                if limit is not None and total > limit:
                    raise _Over
            else:
                on[u] = True
                walk(u, weight * k)
                on[u] = False

    try:
        walk(s, 1)
    except _Over:
        return limit + 1
    return total


def _split(a: list[list[int]], edge: tuple[int, int], p: int, undo: list) -> None:
    x, y = edge
    a[x][y] -= 1
    if x != y:
        a[y][x] -= 1
    a[p][x] += 1
    a[x][p] += 1
    a[p][y] += 1
    a[y][p] += 1
    undo.append((edge, p))


def _unsplit(a: list[list[int]], undo: list) -> None:
    for (x, y), p in reversed(undo):
        a[p][x] -= 1
        a[x][p] -= 1
        a[p][y] -= 1
        a[y][p] -= 1
        a[x][y] += 1
        if x != y:
            a[y][x] += 1
    undo.clear()


def ear_deltas(g: Multigraph, limit: int | None = None) -> Iterator[tuple[str, Anchor, Anchor, int]]:
    """Yield ``(kind, a, b, new_cycles)`` for every one-ear placement on ``g``.

    The count of new cycles is the number of paths between the resolved
    anchors; with ``limit`` set, any value above it is reported as
    ``limit + 1``.
    """
    n = g.n
    size = n + 2
    a = [list(row) + [0, 0] for row in g.multiplicity] + [[0] * size, [0] * size]
    p, q = n, n + 1
    undo: list = []
    for u in range(n):
        for v in range(u + 1, n):
            yield VERTEX_VERTEX, Anchor.at(u), Anchor.at(v), _path_count(a, u, v, limit)
    for e, edge in enumerate(g.edges):
        _split(a, edge, p, undo)
        for v in range(n):
            yield VERTEX_EDGE, Anchor.at(v), Anchor.inside(e), _path_count(a, v, p, limit)
        # two points inside e: p splits e, q splits the piece p-y
        _split(a, (p, edge[1]), q, undo)
        yield SAME_EDGE, Anchor.inside(e), Anchor.inside(e), _path_count(a, p, q, limit)
        _unsplit(a, undo)
        _split(a, edge, p, undo)
        for f in range(e + 1, g.m):
            _split(a, g.edges[f], q, undo)
            delta = _path_count(a, p, q, limit)
            undo.pop()
            fx, fy = g.edges[f]
            a[q][fx] -= 1
            a[fx][q] -= 1
            a[q][fy] -= 1
            a[fy][q] -= 1
            a[fx][fy] += 1
            if fx != fy:
                a[fy][fx] += 1
            yield DIFFERENT_EDGE, Anchor.inside(e), Anchor.inside(f), delta
        _unsplit(a, undo)


def _children(item: tuple[bytes, int], max_count: int | None, wanted: frozenset[int] | None):
    code, base = item
    g = from_code(code)
    limit = None if max_count is None else max_count - base
    if limit is not None and limit < 2:
        return []
    out = []
    for _, a, b, delta in ear_deltas(g, limit):
        count = base + delta
        if max_count is not None and count > max_count:
            continue
        if wanted is not None and count not in wanted:
            continue
        h, va, vb = _resolve(g, a, b)
        child = _attach(h, va, vb, 1)
        if min(child.degrees) < 3:
            child = reduce(child).graph
        out.append((canonical_code(child, CANON_MAX_N), count))
    return out


def _chunks(seq: list, k: int) -> list[list]:
    return [seq[i::k] for i in range(k)]


def _expand_chunk(args):
    items, max_count, wanted = args
    out = []
    for item in items:
        out.extend(_children(item, max_count, wanted))
    return out


def expand(
    parents: dict[bytes, int],
    max_count: int | None = None,
    wanted: Iterable[int] | None = None,
    jobs: int = 1,
) -> dict[bytes, int]:
    """Reduced one-ear extensions of the given classes, keyed by canonical code.

    ``parents`` maps codes to cycle counts.  Results are merged by code, so
    the output is independent of ``jobs`` and of scheduling.
    """
    wanted = None if wanted is None else frozenset(wanted)
    items = sorted(parents.items())
    if jobs > 1 and len(items) > jobs:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_expand_chunk, [(c, max_count, wanted) for c in _chunks(items, jobs)])
            pairs = [x for part in parts for x in part]
    else:
        pairs = _expand_chunk((items, max_count, wanted))
    out: dict[bytes, int] = {}
    for code, count in pairs:
        prev = out.setdefault(code, count)
        if prev != count:
            raise AssertionError("one class reached with two different cycle counts")
    return dict(sorted(out.items()))


def _frontier(rank: int, counts: dict[bytes, int]) -> GenerationFrontier:
    classes = {code: ReducedClass(from_code(code), f"rank {rank}") for code in counts}
    return GenerationFrontier(rank, classes, counts)


@lru_cache(maxsize=None)
def _complete_counts(rank: int, jobs: int = 1) -> dict[bytes, int]:
    if rank == 1:
        return {canonical_code(loop_graph()): 1}
    return expand(_complete_counts(rank - 1, jobs), jobs=jobs)


def generate_frontier(r: int, jobs: int = 1) -> GenerationFrontier:
    """All reduced inseparable classes of cyclomatic rank ``r``."""
    if r < 1:
        raise SearchLimitError("rank must be positive")
    cap = max_rank()
    if r > cap:
        raise SearchLimitError(f"rank {r} exceeds the rank cap {cap}")
    return _frontier(r, dict(_complete_counts(r, jobs)))


def bounded_frontiers(max_count: int, jobs: int = 1) -> Iterator[GenerationFrontier]:
    """Frontiers restricted to classes with at most ``max_count`` cycles.

    Deleting an ear leaves an inseparable graph with strictly fewer cycles,
    so every class under the bound extends some class under the bound one
    rank lower; the walk stops when a rank has no such classes.
    """
    counts = {canonical_code(loop_graph()): 1} if max_count >= 1 else {}
    rank = 1
    while counts:
        yield _frontier(rank, counts)
        counts = expand(counts, max_count=max_count, jobs=jobs)
        rank += 1


def min_cycles_by_rank(r: int) -> int:
    """Fewest cycles of an inseparable graph of rank ``r``.

    Exhaustive up to the complete-frontier rank cap; beyond it the bound
    ``r (r + 1) / 2`` (attained by the theta graph) is confirmed on the
    count-bounded frontier, which is complete below that bound.
    """
    if r < 1:
        raise SearchLimitError("rank must be positive")
    if r <= max_rank():
        return min(_complete_counts(r).values())
    if r > HARD_MAX_RANK:
        raise SearchLimitError(f"rank {r} beyond the supported range")
    bound = count_cycles(theta(r + 1))
    for f in bounded_frontiers(bound):
        if f.rank == r:
            return min(f.counts.values())
    raise AssertionError("rank not reached under its theta bound")


# -- witness tables ----------------------------------------------------------

@dataclass(frozen=True)
class WitnessRecord:
    count: int
    graph: Multigraph
    planar: bool
    cubic: bool
    hamiltonian: bool

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def as_json(self) -> dict:
        return {
            "count": self.count,
            "n": self.n,
            "m": self.m,
            "mgf": to_mgf(self.graph),
            "planar": self.planar,
            "cubic": self.cubic,
            "hamiltonian": self.hamiltonian,
        }


def _check_filters(filters: Iterable[str]) -> frozenset[str]:
    filters = frozenset(filters)
    unknown = filters - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filter(s): {sorted(unknown)}")
    return filters


def _record(g: Multigraph, count: int) -> WitnessRecord:
    return WitnessRecord(count, g, is_planar(g, CANON_MAX_N), is_cubic(g), is_hamiltonian(g, CANON_MAX_N))


_PREDICATES = {
    "cubic": is_cubic,
    "planar": lambda g: is_planar(g, CANON_MAX_N),
    "hamiltonian": lambda g: is_hamiltonian(g, CANON_MAX_N),
}


def _passes(g: Multigraph, filters: frozenset[str]) -> bool:
    return all(_PREDICATES[f](g) for f in FILTERS if f in filters)


def _offer(best: dict[int, tuple], code: bytes, count: int, filters: frozenset[str]) -> None:
    cur = best.get(count)
    g = from_code(code)
    key = (g.n, g.m, code)
    if (cur is None or key < cur) and _passes(g, filters):
        best[count] = key


def _certified_absent(counts: Iterable[int], filters: frozenset[str]) -> bool:
    for c in counts:
        try:
            if not prove_nonexistence(c, filters).absent:
                return False
        except SearchLimitError:
            return False
    return True


def witness_search(
    max_count: int = 100,
    filters: Iterable[str] = (),
    jobs: int = 1,
    rank_limit: int = HARD_MAX_RANK,
    cubic_max_n: int = CUBIC_MAX_N,
    verify: bool = True,
) -> dict[int, WitnessRecord]:
    """Smallest found witness, by ``(n, m, canonical code)``, for each count.

    Without the cubic filter, frontiers are walked rank by rank under the
    count bound; with the planar filter only planar parents are expanded
    (planarity survives ear deletion, so no planar class is lost).  With
    the cubic filter, cubic classes are generated by vertex count instead.
    The walk stops once every count up to ``max_count`` has a witness or is
    certified absent, or when the rank (or cubic order) limit is reached.
    Past rank 7 only children with still-missing counts are built.  Each
    stored witness is re-counted with the subset oracle.
    """
    filters = _check_filters(filters)
    best: dict[int, tuple] = {}
    wanted = set(range(1, max_count + 1))

    def done() -> bool:
        missing = wanted - set(best)
        return not missing or _certified_absent(sorted(missing), filters)

    if "cubic" in filters:
        for n, classes in _cubic_levels(cubic_max_n, jobs):
            for code, count in classes.items():
                if count <= max_count:
                    _offer(best, code, count, filters)
            log.info("cubic n=%d: %d classes, %d counts witnessed", n, len(classes), len(best))
            if done():
                break
    else:
        counts = {canonical_code(loop_graph()): 1}
        rank = 1
        while counts:
            for code, count in counts.items():
                _offer(best, code, count, filters)
            log.info("rank %d: %d classes, %d counts witnessed", rank, len(counts), len(best))
            if done() or rank >= rank_limit:
                break
            parents = counts
            if "planar" in filters:
                parents = {c: k for c, k in counts.items() if is_planar(from_code(c), CANON_MAX_N)}
            rank += 1
            if rank <= COMPLETE_WITNESS_RANK:
                counts = expand(parents, max_count=max_count, jobs=jobs)
                continue
            # targeted: only missing counts, parents in fixed sorted batches
            target = wanted - set(best)
            items = sorted(parents.items())
            counts = {}
            for i in range(0, len(items), TARGET_BATCH):
                part = expand(dict(items[i:i + TARGET_BATCH]), max_count, target, jobs)
                for code, count in part.items():
                    _offer(best, code, count, filters)
                counts.update(part)
                if done():
                    break

    table = {c: _record(from_code(key[2]), c) for c, key in sorted(best.items())}
    if verify:
        for c, rec in table.items():
            if count_cycles_oracle(rec.graph) != c:
                raise AssertionError(f"oracle disagrees with the witness for {c}")
    return table


def table_to_json(table: dict[int, WitnessRecord]) -> str:
    return json.dumps([rec.as_json() for rec in table.values()], indent=2) + "\n"


# -- nonexistence -------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    count: int
    filters: tuple[str, ...]
    absent: bool
    rank_cap: int
    classes_per_rank: dict[int, int] = field(default_factory=dict)
    counts_per_rank: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def as_json(self) -> dict:
        return {
            "count": self.count,
            "filters": list(self.filters),
            "absent": self.absent,
            "rank_cap": self.rank_cap,
            "ranks": [
                {
                    "rank": r,
                    "classes": self.classes_per_rank[r],
                    "counts": list(self.counts_per_rank[r]),
                }
                for r in sorted(self.classes_per_rank)
            ],
        }


@lru_cache(maxsize=None)
def _filtered_counts(rank: int, filters: frozenset[str]) -> tuple[int, tuple[int, ...]]:
    counts = _complete_counts(rank)
    kept = []
    for code, c in counts.items():
        if _passes(from_code(code), filters):
            kept.append(c)
    return len(kept), tuple(sorted(set(kept)))


def prove_nonexistence(c: int, filters: Iterable[str] = ()) -> Certificate:
    """Exhaustively decide whether some inseparable graph has exactly ``c`` cycles.

    A graph with ``c`` cycles has a rank ``r`` with ``min_cycles_by_rank(r) <= c``;
    the cap ``R`` is the first rank whose minimum exceeds ``c`` and must lie
    within the exhaustive range.  The certificate lists, for each rank
    below ``R``, how many classes pass the filters and which counts they
    attain.
    """
    filters = _check_filters(filters)
    if c < 1:
        raise ValueError("cycle counts are positive")
    cap = None
    for r in range(1, max_rank() + 1):
        if min_cycles_by_rank(r) > c:
            cap = r
            break
    if cap is None:
        raise SearchLimitError(f"no rank up to {max_rank()} has minimum above {c}")
    per_rank = {}
    achieved = {}
    for r in range(1, cap):
        n_classes, counts = _filtered_counts(r, filters)
        per_rank[r] = n_classes
        achieved[r] = counts
    absent = not any(c in cs for cs in achieved.values())
    return Certificate(c, tuple(sorted(filters)), absent, cap, per_rank, achieved)


def nonplanar_classification(max_count: int = 24) -> list[ReducedClass]:
    """Reduced nonplanar classes with fewer than ``max_count`` cycles."""
    out = []
    for f in bounded_frontiers(max_count - 1):
        for code in f.classes:
            g = f.classes[code].graph
            if not is_planar(g, CANON_MAX_N):
                out.append(ReducedClass(g, f"{f.counts[code]} cycles"))
    return out


# -- cubic classes -------------------------------------------------------------

def _cubic_children(item):
    code, _ = item
    g = from_code(code)
    out = []
    for kind, a, b in anchor_pairs(g):
        if kind in (SAME_EDGE, DIFFERENT_EDGE):
            h, va, vb = _resolve(g, a, b)
            out.append(canonical_code(_attach(h, va, vb, 1), CANON_MAX_N))
    return out


def _cubic_chunk(items):
    out = []
    for item in items:
        out.extend(_cubic_children(item))
    return out


@lru_cache(maxsize=None)
def _cubic_step(n: int, jobs: int = 1) -> dict[bytes, int]:
    if n == 2:
        g = theta(3)
        return {canonical_code(g): 3}
    parents = sorted(_cubic_step(n - 2, jobs).items())
    if jobs > 1 and len(parents) > jobs:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            codes = [x for part in pool.map(_cubic_chunk, _chunks(parents, jobs)) for x in part]
    else:
        codes = _cubic_chunk(parents)
    found = sorted(set(codes))
    return {code: count_cycles(from_code(code)) for code in found}


def _cubic_levels(max_n: int, jobs: int = 1) -> Iterator[tuple[int, dict[bytes, int]]]:
    for n in range(2, max_n + 1, 2):
        yield n, _cubic_step(n, jobs)


def cubic_classes(max_n: int = CUBIC_MAX_N, jobs: int = 1) -> dict[int, dict[bytes, int]]:
    """Inseparable cubic multigraphs by (even) order, as code -> cycle count.

    Deleting the last ear of an ear decomposition of a cubic graph removes
    one edge; suppressing its two ends gives a cubic graph of order
    ``n - 2``.  So order ``n`` is generated by joining interior points of
    one or two edges of every order ``n - 2`` class.
    """
    if max_n > 16:
        raise SearchLimitError("cubic generation limited to n <= 16")
    return dict(_cubic_levels(max_n, jobs))


def cubic_planar_minimum_order(c: int, max_n: int = CUBIC_MAX_N, jobs: int = 1) -> int | None:
    """Smallest order of an inseparable planar cubic graph with ``c`` cycles, or None."""
    for n, classes in _cubic_levels(max_n, jobs):
        for code, count in classes.items():
            if count == c and is_planar(from_code(code), CANON_MAX_N):
                return n
    return None


# -- OEIS ---------------------------------------------------------------------

def oeis_prefix(seq: str, terms: int, table: dict[int, WitnessRecord] | None = None) -> list[int]:
    """First ``terms`` cycle count numbers (A385523) or cubic ones (A385524).

    Without ``table`` the established exception sets are used; with one,
    the attained counts of that witness table are listed instead.
    """
    if seq not in EXCEPTIONS:
        raise ValueError(f"unknown sequence {seq!r}; expected one of {sorted(EXCEPTIONS)}")
    if terms < 0:
        raise ValueError("terms must be nonnegative")
    if table is not None:
        values = sorted(table)
    else:
        values = [k for k in range(1, 101) if k not in EXCEPTIONS[seq]]
    if terms > len(values):
        raise SearchLimitError(f"only {len(values)} terms are established")
    return values[:terms]
