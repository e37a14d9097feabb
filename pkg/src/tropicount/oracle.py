"""Exhaustive enumeration of proper, admissible and marked admissible systems.

Two independent strategies are provided: a left-to-right sweep that branches
on which open intervals continue at each point, and a naive sweep over all
multisets of candidate intervals.  They must agree exactly wherever both are
feasible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb
from typing import Iterator, Optional

from .errors import ResourceLimitError
from .geometry import SigmaProfile
from .systems import (
    ProperSystem,
    count_markings,
    coverage,
    enumerate_markings,
    is_admissible,
)

DEFAULT_NODE_BUDGET = 10**8


@dataclass
class OracleReport:
    proper_count: int = 0
    admissible_count: int = 0
    marked_admissible_count: int = 0
    systems: Optional[list[ProperSystem]] = field(default=None, repr=False)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.proper_count, self.admissible_count, self.marked_admissible_count


def enumerate_proper(profile: SigmaProfile, node_budget: int = DEFAULT_NODE_BUDGET) -> Iterator[ProperSystem]:
    """Each proper system exactly once, via a coverage-driven sweep.

    Open intervals are tracked as a multiset of start points, so two
    intervals with the same start are never distinguished and no multiset is
    produced twice.
    """
    m, sigma, budget = profile.m, profile.sigma, profile.budget
    nodes = 0

    def sweep(i, open_starts, closed, n_opened):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(f"proper-system search exceeded {node_budget} nodes")
        if i > m:
            done = closed + [(a, m) for a, k in open_starts for _ in range(k)]
            if len(done) == budget:
                yield ProperSystem(profile, tuple(done))
            return
        # choose how many intervals of each start survive past i - 1
        ranges = [range(min(k, sigma[i]) + 1) for _, k in open_starts]
        for keep in product(*ranges):
            kept = sum(keep)
            new = sigma[i] - kept
            if new < 0 or n_opened + new > budget:
                continue
            nxt_closed = list(closed)
            nxt_open = []
            for (a, k), s in zip(open_starts, keep):
                nxt_closed.extend([(a, i - 1)] * (k - s))
                if s:
                    nxt_open.append((a, s))
            if new:
                nxt_open.append((i, new))
            yield from sweep(i + 1, tuple(nxt_open), nxt_closed, n_opened + new)

    yield from sweep(0, (), [], 0)


def candidate_intervals(profile: SigmaProfile) -> list[tuple[int, int]]:
    s = profile.sigma
    return [
        (a, b)
        for a in range(profile.m + 1)
        for b in range(a, profile.m + 1)
        if all(s[i] > 0 for i in range(a, b + 1))
    ]


def enumerate_proper_naive(profile: SigmaProfile, max_candidates: int = 10**7) -> Iterator[ProperSystem]:
    """Every multiset of candidate intervals of the right size, filtered by coverage."""
    cands = candidate_intervals(profile)
    if comb(len(cands) + profile.budget - 1, profile.budget) > max_candidates:
        raise ResourceLimitError("naive sweep too large")
    want = list(profile.sigma)
    for combo in combinations_with_replacement(cands, profile.budget):
        if coverage(combo, profile.m) == want:
            yield ProperSystem(profile, combo)


def count_marked_admissible(
    profile: SigmaProfile,
    strategy: str = "sweep",
    keep_systems: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OracleReport:
    if strategy == "sweep":
        source = enumerate_proper(profile, node_budget)
    elif strategy == "naive":
        source = enumerate_proper_naive(profile)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    rep = OracleReport(systems=[] if keep_systems else None)
    seen = set()
    for system in source:
        key = system.key()
        if key in seen:
            raise AssertionError(f"system emitted twice: {key!r}")
        seen.add(key)
        rep.proper_count += 1
        if is_admissible(system.intervals, profile.m):
            rep.admissible_count += 1
            rep.marked_admissible_count += count_markings(system.intervals)
            if keep_systems:
                rep.systems.append(system)
    return rep


def marked_admissible_keys(profile: SigmaProfile) -> set[bytes]:
    """Canonical forms of every marked admissible system."""
    keys = set()
    for system in enumerate_proper(profile):
        if is_admissible(system.intervals, profile.m):
            keys.update(ms.key() for ms in enumerate_markings(system.intervals))
    return keys
