"""Horizontal segment collections and the strip criterion for admissibility.

A collection is a set of horizontal integer segments at integer levels.  Its
x-projection is a multiset of intervals; when that multiset is a proper
system, a labeling of the segments as left- or right-oriented that satisfies
the three strip conditions certifies the system is admissible.

Strip b_i = {i <= x <= i + 1} corresponds to the half-vertex h_i of the
incidence graph.  With orientations, every segment points into the strip at
its head end, and the segments "leaving" a strip are

    S(b_i) = {right-oriented segments starting at i + 1}
             U {left-oriented segments ending at i}.

Conditions: (i) |S(b)| <= 1; (ii) the element of S(b) is at the lowest
level among the segments touching b; (iii) exactly one strip in play has
S(b) empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ResourceLimitError
from .geometry import SigmaProfile
from .systems import ProperSystem, validate_proper

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True, order=True)
class HSeg:
    level: int
    xl: int
    xr: int

    def __post_init__(self):
        if self.xl > self.xr:
            raise ValueError(f"segment with xl > xr: {self}")

    @property
    def interval(self) -> tuple[int, int]:
        return self.xl, self.xr

    def shifted(self, dx: int) -> "HSeg":
        return HSeg(self.level, self.xl + dx, self.xr + dx)


@dataclass(frozen=True)
class Region:
    """Axis-aligned box used to constrain holes; kept for rendering."""

    kind: str
    x0: int
    y0: int
    x1: int
    y1: int


@dataclass(frozen=True)
class RowCollection:
    segments: tuple[HSeg, ...]
    holes: frozenset = frozenset()
    regions: tuple[Region, ...] = ()

    def __post_init__(self):
        segs = tuple(sorted(self.segments))
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "holes", frozenset(self.holes))
        for a, b in zip(segs, segs[1:]):
            if a.level == b.level and a.xr >= b.xl:
                raise ValueError(f"overlapping segments on level {a.level}: {a}, {b}")

    def __len__(self):
        return len(self.segments)

    def intervals(self) -> list[tuple[int, int]]:
        return [s.interval for s in self.segments]

    def levels(self) -> list[int]:
        return sorted({s.level for s in self.segments})


def project_to_system(collection: RowCollection, profile: SigmaProfile):
    """ProperSystem of the x-projections, or the Violation that blocks it."""
    intervals = collection.intervals()
    bad = validate_proper(intervals, profile)
    if bad is not None:
        return bad
    return ProperSystem(profile, tuple(intervals))


def strip_neighbors(segments: Iterable[HSeg], i: int):
    """(segments ending at x = i, segments starting at x = i + 1)."""
    segments = list(segments)
    ends = {s for s in segments if s.xr == i}
    starts = {s for s in segments if s.xl == i + 1}
    return ends, starts


@dataclass(frozen=True)
class StripResult:
    passed: bool
    condition: Optional[str] = None
    strip: Optional[int] = None

    def __bool__(self):
        return self.passed


def _strip_tables(segments: Sequence[HSeg]):
    ends: dict[int, list[int]] = {}
    starts: dict[int, list[int]] = {}
    for k, s in enumerate(segments):
        ends.setdefault(s.xr, []).append(k)
        starts.setdefault(s.xl - 1, []).append(k)
    return ends, starts


def strip_check(
    collection: RowCollection,
    partition: Mapping[HSeg, str] | Sequence[str],
    m: Optional[int] = None,
) -> StripResult:
    """Evaluate the three strip conditions for a left/right labeling.

    With ``m`` given, the strips are exactly those of the incidence graph
    (i = 0 .. m-1): every one of them is in play, and a segment whose head
    end lies on x = 0 or x = m has no strip to point into, so it counts as an
    uncovered sink for condition (iii).  Without ``m``, strips are scanned
    across the bounding box and strips touching no segment are ignored.
    """
    segs = collection.segments
    labels = _labels(segs, partition)
    if not segs and m is None:
        return StripResult(False, "iii")
    ends, starts = _strip_tables(segs)
    if m is None:
        strips = range(min(s.xl for s in segs) - 1, max(s.xr for s in segs) + 1)
    else:
        if any(s.xl < 0 or s.xr > m for s in segs):
            raise ValueError("segment outside [0, m]")
        strips = range(m)

    sinks = []
    for i in strips:
        left = ends.get(i, [])
        right = starts.get(i, [])
        if m is None and not left and not right:
            continue
        out = [k for k in right if labels[k] == "R"] + [k for k in left if labels[k] == "L"]
        if len(out) > 1:
            return StripResult(False, "i", i)
        if out:
            low = min(segs[k].level for k in left + right)
            if segs[out[0]].level > low:
                return StripResult(False, "ii", i)
        else:
            sinks.append(i)
    if m is not None:
        for k, s in enumerate(segs):
            if (labels[k] == "R" and s.xr == m) or (labels[k] == "L" and s.xl == 0):
                sinks.append(s.xr if labels[k] == "R" else -1)
    if len(sinks) != 1:
        return StripResult(False, "iii", sinks[1] if len(sinks) > 1 else None)
    return StripResult(True)


def _labels(segs, partition):
    if isinstance(partition, Mapping):
        labels = [partition[s] for s in segs]
    else:
        labels = list(partition)
    if len(labels) != len(segs) or any(x not in ("L", "R") for x in labels):
        raise ValueError("partition must label every segment L or R")
    return labels


def hole_side_labels(collection: RowCollection) -> list[Optional[str]]:
    """R for segments just left of a hole, L just right of one, else None.

    A segment flanked by holes on both sides gets R.
    """
    labels: list[Optional[str]] = [None] * len(collection.segments)
    for k, s in enumerate(collection.segments):
        if (s.level, s.xl - 1) in collection.holes:
            labels[k] = "L"
        if (s.level, s.xr) in collection.holes:
            labels[k] = "R"
    return labels


def find_partition(collection: RowCollection, m: Optional[int] = None) -> Optional[tuple[str, ...]]:
    """A labeling passing the strip conditions, or None when none exists.

    Tries the hole-side labeling with every completion of the unlabeled
    segments first, then all labelings.  A None result says nothing about
    admissibility: the conditions are only sufficient.
    """
    segs = collection.segments
    base = hole_side_labels(collection)
    free = [k for k, lab in enumerate(base) if lab is None]
    if len(free) <= EXHAUSTIVE_LIMIT:
        for pick in product("RL", repeat=len(free)):
            labels = list(base)
            for k, lab in zip(free, pick):
                labels[k] = lab
            if strip_check(collection, labels, m):
                return tuple(labels)
    if len(segs) > EXHAUSTIVE_LIMIT:
        raise ResourceLimitError(
            f"hole-side labeling failed and {len(segs)} segments exceed the exhaustive limit"
        )
    for labels in product("RL", repeat=len(segs)):
        if strip_check(collection, labels, m):
            return tuple(labels)
    return None
