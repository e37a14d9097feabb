"""Proper systems of intervals, their incidence graph and markings.

A proper system is a multiset of closed integer intervals in [0, m] whose
coverage at each integer i equals sigma(i).  Its graph g has one vertex per
interval plus half-integer vertices h_0 .. h_{m-1}; h_i joins every interval
ending at i and every interval starting at i + 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from math import comb, prod
from typing import Iterable, Iterator, Optional, Sequence

from .geometry import SigmaProfile

Interval = tuple[int, int]


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b; False if they were already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class ProperSystem:
    profile: SigmaProfile
    intervals: tuple[Interval, ...]

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(sorted(tuple(iv) for iv in self.intervals)))

    @property
    def m(self) -> int:
        return self.profile.m

    def key(self) -> bytes:
        return canonicalize(self.intervals)


@dataclass(frozen=True)
class MarkedSystem:
    pairs: tuple[tuple[Interval, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((tuple(iv), mk) for iv, mk in self.pairs))
        for (a, b), mk in pairs:
            if not a <= mk <= b:
                raise ValueError(f"mark {mk} outside interval [{a},{b}]")
        object.__setattr__(self, "pairs", pairs)

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return tuple(iv for iv, _ in self.pairs)

    def key(self) -> bytes:
        return canonicalize_marked(self.pairs)


@dataclass(frozen=True)
class Violation:
    kind: str  # "range" | "count" | "coverage"
    witness: int
    got: int
    want: int

    def __str__(self):
        return f"{self.kind} violation at {self.witness}: got {self.got}, want {self.want}"


def canonicalize(intervals: Iterable[Interval]) -> bytes:
    """Sorted lexicographic encoding; equal multisets give equal bytes."""
    return ";".join(f"{a},{b}" for a, b in sorted(intervals)).encode("ascii")


def canonicalize_marked(pairs: Iterable[tuple[Interval, int]]) -> bytes:
    return ";".join(f"{a},{b}@{mk}" for (a, b), mk in sorted(pairs)).encode("ascii")


def coverage(intervals: Iterable[Interval], m: int) -> list[int]:
    diff = [0] * (m + 2)
    for a, b in intervals:
        diff[a] += 1
        diff[b + 1] -= 1
    out, run = [], 0
    for i in range(m + 1):
        run += diff[i]
        out.append(run)
    return out


def validate_proper(intervals: Sequence[Interval], profile: SigmaProfile) -> Optional[Violation]:
    """None when the multiset is a proper system for the profile."""
    m = profile.m
    for idx, (a, b) in enumerate(intervals):
        if not 0 <= a <= b <= m:
            return Violation("range", idx, a if a < 0 or a > b else b, m)
    if len(intervals) != profile.budget:
        return Violation("count", len(intervals), len(intervals), profile.budget)
    for i, (got, want) in enumerate(zip(coverage(intervals, m), profile.sigma)):
        if got != want:
            return Violation("coverage", i, got, want)
    return None


def make_system(intervals: Iterable[Interval], profile: SigmaProfile) -> ProperSystem:
    intervals = tuple(intervals)
    bad = validate_proper(intervals, profile)
    if bad is not None:
        raise ValueError(str(bad))
    return ProperSystem(profile, intervals)


@dataclass
class IncidenceGraph:
    n_intervals: int
    m: int
    edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def n_vertices(self) -> int:
        return self.n_intervals + self.m

    def half_vertex(self, i: int) -> int:
        return self.n_intervals + i

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)


def incidence_graph(intervals: Sequence[Interval], m: int) -> IncidenceGraph:
    g = IncidenceGraph(len(intervals), m)
    for k, (a, b) in enumerate(intervals):
        if a >= 1:
            g.edges.append((k, g.half_vertex(a - 1)))
        if b <= m - 1:
            g.edges.append((k, g.half_vertex(b)))
    return g


def is_tree(n_vertices: int, edges: Iterable[tuple[int, int]]) -> bool:
    edges = list(edges)
    if len(edges) != n_vertices - 1:
        return False
    uf = UnionFind(n_vertices)
    return all(uf.union(a, b) for a, b in edges)


def is_admissible(intervals: Sequence[Interval], m: int) -> bool:
    g = incidence_graph(intervals, m)
    return is_tree(g.n_vertices, g.edges)


def count_markings(intervals: Iterable[Interval]) -> int:
    """Distinct markings; marks on identical intervals form a multiset."""
    return prod(comb(b - a + k, k) for (a, b), k in Counter(intervals).items())


def enumerate_markings(intervals: Iterable[Interval]) -> Iterator[MarkedSystem]:
    groups = sorted(Counter(intervals).items())
    choices = [
        list(combinations_with_replacement(range(a, b + 1), k)) for (a, b), k in groups
    ]
    for pick in product(*choices):
        pairs = [(iv, mk) for (iv, _), marks in zip(groups, pick) for mk in marks]
        yield MarkedSystem(tuple(pairs))


def restricted_markings(pairs: Sequence[tuple[Interval, tuple[int, int]]]) -> Iterator[MarkedSystem]:
    """Markings where each interval's mark is drawn from its own sub-range.

    Identical intervals are grouped; their marks form a multiset, so the same
    marked system is never produced twice.
    """
    groups: dict[Interval, list[tuple[int, int]]] = {}
    for iv, rng in pairs:
        groups.setdefault(tuple(iv), []).append(tuple(rng))
    per_group = []
    for iv, ranges in sorted(groups.items()):
        if len(set(ranges)) == 1:
            lo, hi = ranges[0]
            opts = list(combinations_with_replacement(range(lo, hi + 1), len(ranges)))
        else:
            opts = sorted({tuple(sorted(p)) for p in product(*(range(lo, hi + 1) for lo, hi in ranges))})
        per_group.append((iv, opts))
    for pick in product(*(opts for _, opts in per_group)):
        out = [(iv, mk) for (iv, _), marks in zip(per_group, pick) for mk in marks]
        yield MarkedSystem(tuple(out))


def count_restricted_markings(pairs: Sequence[tuple[Interval, tuple[int, int]]]) -> int:
    groups: dict[Interval, list[tuple[int, int]]] = {}
    for iv, rng in pairs:
        groups.setdefault(tuple(iv), []).append(tuple(rng))
    total = 1
    for ranges in groups.values():
        if len(set(ranges)) == 1:
            lo, hi = ranges[0]
            total *= comb(hi - lo + len(ranges), len(ranges)) if hi >= lo else 0
        else:
            total *= len({tuple(sorted(p)) for p in product(*(range(lo, hi + 1) for lo, hi in ranges))})
    return total
