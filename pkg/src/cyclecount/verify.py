"""Reproduction checks grouped by scope, reported as JSON lines."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from . import search
from .cycles import count_cycles, count_cycles_oracle, count_st_paths
from .ears import Anchor, check_ear_path, check_extremality, check_isotonicity, ear_extension_profile
from .multigraph import (
    canonical_code,
    complete_bipartite,
    complete_graph,
    is_planar,
    necklace,
    theta,
)
from .treeduality import (
    CSW_MISSING,
    inner_dual,
    min_subtree_counts,
    nonisomorphic_trees,
    spectrum_complete_below,
    subtree_count_spectrum,
    tree_to_outerplanar,
    trees_isomorphic,
    verify_bijection,
)

SCOPES = ("lemmas", "theorem1", "theorem2", "corollaries", "duality")

NON_CYCLE_COUNTS = [2, 4, 5, 8, 9, 16]
NON_CUBIC_COUNTS = [1, 2, 4, 5, 8, 9, 13, 16]


@dataclass
class CheckResult:
    check: str
    passed: bool
    observed: object
    expected: object
    seconds: float

    def as_json(self) -> str:
        return json.dumps({
            "check": self.check,
            "status": "pass" if self.passed else "fail",
            "observed": self.observed,
            "expected": self.expected,
            "seconds": round(self.seconds, 3),
        })


def _missing(table, upto=100):
    return [c for c in range(1, upto + 1) if c not in table]


def _lemmas() -> Iterator[tuple[str, Callable[[], tuple]]]:
    yield "theta_formula", lambda: (
        [count_cycles(theta(k)) for k in range(3, 9)],
        [k * (k - 1) // 2 for k in range(3, 9)],
    )
    yield "named_counts", lambda: (
        [count_cycles(complete_graph(4)), count_cycles(complete_bipartite(3, 3)),
         count_cycles(complete_graph(5)), count_cycles(necklace(4))],
        [7, 15, 37, 20],
    )
    yield "k4_paths", lambda: (count_st_paths(complete_graph(4), 0, 1), 5)
    yield "ear_path_k4", lambda: (check_ear_path(complete_graph(4), Anchor.at(0), Anchor.at(1)), True)
    yield "k4_one_ear_counts", lambda: (
        sorted({p.count for p in ear_extension_profile(complete_graph(4))}), [12, 13, 14, 15])
    yield "theta_one_ear_counts", lambda: (
        sorted({p.count for p in ear_extension_profile(theta(3))}), [6, 7])
    yield "k33_min_extension", lambda: (
        min(p.count for p in ear_extension_profile(complete_bipartite(3, 3))), 24)

    def oracle_rank5():
        bad = 0
        for r in range(1, 6):
            for cls in search.generate_frontier(r).classes.values():
                bad += count_cycles(cls.graph) != count_cycles_oracle(cls.graph)
        return bad, 0

    yield "oracle_agreement_rank5", oracle_rank5

    def iso_rank4():
        bad = 0
        for r in range(2, 5):
            for cls in search.generate_frontier(r).classes.values():
                bad += not all(check_isotonicity(cls.graph).values())
                bad += not all(check_extremality(cls.graph).values())
        return bad, 0

    yield "isotonicity_extremality_rank4", iso_rank4
    yield "min_cycles_by_rank", lambda: (
        [search.min_cycles_by_rank(r) for r in range(1, 7)], [1, 3, 6, 10, 15, 21])


def _theorem1() -> Iterator[tuple[str, Callable[[], tuple]]]:
    yield "witness_exceptions", lambda: (_missing(search.witness_search(100)), NON_CYCLE_COUNTS)
    yield "nonexistence", lambda: (
        [c for c in NON_CYCLE_COUNTS if search.prove_nonexistence(c).absent], NON_CYCLE_COUNTS)


def _theorem2() -> Iterator[tuple[str, Callable[[], tuple]]]:
    yield "cubic_exceptions", lambda: (
        _missing(search.witness_search(100, {"cubic"})), NON_CUBIC_COUNTS)
    yield "planar_cubic_exceptions", lambda: (
        _missing(search.witness_search(100, {"cubic", "planar"})), NON_CUBIC_COUNTS)
    yield "cubic_nonexistence", lambda: (
        [c for c in NON_CUBIC_COUNTS if search.prove_nonexistence(c, {"cubic"}).absent],
        NON_CUBIC_COUNTS)
    yield "planar_cubic_68_order", lambda: (search.cubic_planar_minimum_order(68), 14)


def _corollaries() -> Iterator[tuple[str, Callable[[], tuple]]]:
    yield "planar_hamiltonian_exceptions", lambda: (
        _missing(search.witness_search(100, {"planar", "hamiltonian"})), NON_CYCLE_COUNTS)

    def nonplanar():
        found = search.nonplanar_classification(24)
        return [canonical_code(c.graph).hex() for c in found], [canonical_code(complete_bipartite(3, 3)).hex()]

    yield "nonplanar_below_24", nonplanar
    yield "k5_nonplanar", lambda: (is_planar(complete_graph(5)), False)


def _duality() -> Iterator[tuple[str, Callable[[], tuple]]]:
    trees = [t for n in range(2, 9) for t in nonisomorphic_trees(n)]
    yield "tree_count_2_to_8", lambda: (len(trees), 47)
    yield "bijection_2_to_8", lambda: (sum(not verify_bijection(t) for t in trees), 0)
    yield "inner_dual_round_trip", lambda: (
        sum(not trees_isomorphic(inner_dual(tree_to_outerplanar(t)[0]), t) for t in trees), 0)

    def spectrum():
        bound = spectrum_complete_below(13, min_subtree_counts(13))
        spec = subtree_count_spectrum(13)
        return [c for c in range(1, min(bound, 89) + 1) if c not in spec], list(CSW_MISSING)

    yield "csw_spectrum", spectrum


_SCOPE_CHECKS = {
    "lemmas": _lemmas,
    "theorem1": _theorem1,
    "theorem2": _theorem2,
    "corollaries": _corollaries,
    "duality": _duality,
}


def run_checks(scope: str = "all") -> Iterator[CheckResult]:
    if scope == "all":
        scopes = SCOPES
    elif scope in _SCOPE_CHECKS:
        scopes = (scope,)
    else:
        raise ValueError(f"unknown scope {scope!r}; expected one of {SCOPES + ('all',)}")
    for sc in scopes:
        for name, fn in _SCOPE_CHECKS[sc]():
            start = time.perf_counter()
            observed, expected = fn()
            yield CheckResult(f"{sc}.{name}", observed == expected, observed, expected,
                              time.perf_counter() - start)
