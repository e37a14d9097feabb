"""Row-level building blocks shared by the four family generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator, Optional, Sequence

from ..errors import ResourceLimitError
from ..segments import HSeg, Region, RowCollection
from ..systems import MarkedSystem, count_restricted_markings, restricted_markings

DEFAULT_ITERATION_CAP = 10**6


@dataclass
class Row:
    """One perforated horizontal row.

    ``marks`` holds the allowed mark range of each piece, left to right;
    None means any point of the piece.
    """

    level: int
    xl: int
    xr: int
    holes: list[int] = field(default_factory=list)
    marks: list[Optional[tuple[int, int]]] = field(default_factory=list)

    def pieces(self) -> list[tuple[int, int]]:
        out, start = [], self.xl
        for h in sorted(self.holes):
            out.append((start, h))
            start = h + 1
        out.append((start, self.xr))
        return out


@dataclass(frozen=True)
class Instance:
    index: int
    collection: RowCollection
    mark_ranges: tuple[tuple[int, int], ...]

    def intervals(self):
        return self.collection.intervals()

    def marked_systems(self) -> Iterator[MarkedSystem]:
        return restricted_markings(list(zip(self.intervals(), self.mark_ranges)))

    def marked_count(self) -> int:
        return count_restricted_markings(list(zip(self.intervals(), self.mark_ranges)))


def assemble(rows: Sequence[Row], index: int, regions=()) -> Instance:
    pairs = []
    holes = set()
    for row in rows:
        pieces = row.pieces()
        if len(row.marks) != len(pieces):
            raise AssertionError(f"row {row.level}: {len(pieces)} pieces, {len(row.marks)} mark ranges")
        holes.update((row.level, h) for h in row.holes)
        for (a, b), rng in zip(pieces, row.marks):
            if a > b:
                raise AssertionError(f"empty piece on level {row.level}")
            lo, hi = rng if rng is not None else (a, b)
            if not a <= lo <= hi <= b:
                raise AssertionError(f"mark range {rng} outside piece [{a},{b}] on level {row.level}")
            pairs.append((HSeg(row.level, a, b), (lo, hi)))
    pairs.sort()
    coll = RowCollection(tuple(s for s, _ in pairs), frozenset(holes), tuple(regions))
    return Instance(index, coll, tuple(r for _, r in pairs))


def unrank_permutation(rank: int, size: int) -> list[int]:
    """Permutation of range(size) with the given lexicographic rank."""
    items = list(range(size))
    out = []
    for pos in range(size, 0, -1):
        f = factorial(pos - 1)
        q, rank = divmod(rank, f)
        out.append(items.pop(q))
    return out


def split_index(index: int, radices: Sequence[int]) -> list[int]:
    digits = []
    for r in radices:
        index, dgt = divmod(index, r)
        digits.append(dgt)
    return digits


class Family:
    """Indexed enumeration of a construction family.

    Subclasses provide ``size`` and ``instance(index)``; everything else
    (iteration, seeded sampling, the canonical instance) is derived.
    """

    name = "family"

    def size(self) -> int:
        raise NotImplementedError

    def formula_size(self) -> int:
        return self.size()

    def instance(self, index: int) -> Instance:
        raise NotImplementedError

    def params(self) -> tuple:
        raise NotImplementedError

    def canonical(self) -> Instance:
        return self.instance(0)

    def iterate(self, cap: int = DEFAULT_ITERATION_CAP) -> Iterator[Instance]:
        total = self.size()
        if total > cap:
            raise ResourceLimitError(f"{self.name}{self.params()} has {total} instances, cap is {cap}")
        for i in range(total):
            yield self.instance(i)

    def __iter__(self):
        return self.iterate()

    def sample_index(self, seed: int, draw: int) -> int:
        key = f"{seed}|{self.name}|{','.join(map(str, self.params()))}|{draw}"
        return random.Random(key).randrange(self.size())

    def sample(self, seed: int, count: int) -> list[Instance]:
        return [self.instance(self.sample_index(seed, k)) for k in range(count)]

    def marked_size(self, cap: int = DEFAULT_ITERATION_CAP) -> int:
        return sum(inst.marked_count() for inst in self.iterate(cap))
