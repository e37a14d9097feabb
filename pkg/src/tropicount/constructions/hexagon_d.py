"""Collections in the trapeze K(n, d, d1).

A permuted perforated collection of T(n, d - d1) is cut along x = N'
(N' = n(d - d1)); its right half moves right by D = n*d1, and the gap is
filled by the strip B = [N', N' + D].  The strip rows are perforated with
exactly one hole per column, placed by a sequence of up-right staircases of
side-n squares that restart from level -1 whenever they reach the top.
"""

from __future__ import annotations

from math import factorial

from ..geometry import PolygonSpec
from ..segments import Region
from .base import Family, Instance, Row, assemble, split_index, unrank_permutation
from .square import SquareFamily


class HexagonDFamily(Family):
    name = "hexagonD"

    def __init__(self, n: int, d: int, d1: int):
        self.spec = PolygonSpec("hexagonD", d, d1, n=n)
        self.n, self.d, self.d1 = n, d, d1
        self.base = n * (d - d1)
        self.shift = n * d1
        self.triangle = SquareFamily.triangle(self.base)
        self._radices = [factorial(n)] * d1

    def params(self):
        return (self.n, self.d, self.d1)

    def squares(self) -> list[tuple[int, int, int]]:
        """(staircase index, left column, lower side) of every square of C."""
        per = self.d - self.d1  # squares in a full staircase
        out = []
        for g in range(self.d1):
            stair, p = divmod(g, per)
            out.append((stair, self.base + g * self.n, -1 + p * self.n))
        return out

    def stair_counts(self) -> list[int]:
        counts: dict[int, int] = {}
        for stair, _, _ in self.squares():
            counts[stair] = counts.get(stair, 0) + 1
        return [counts[k] for k in sorted(counts)]

    def size(self) -> int:
        return self.triangle.size() * factorial(self.n) ** self.d1

    def split(self, index: int) -> tuple[int, list[int]]:
        if not 0 <= index < self.size():
            raise IndexError(index)
        rest, tri = divmod(index, self.triangle.size())
        return tri, split_index(rest, self._radices)

    def strip_holes(self, digits) -> dict[int, list[int]]:
        holes: dict[int, list[int]] = {}
        top = self.base - 1
        for (_, col, low), rank in zip(self.squares(), digits):
            perm = unrank_permutation(rank, self.n)
            for r in range(self.n):
                level = low + 1 + r
                if 0 <= level <= top:
                    holes.setdefault(level, []).append(col + perm[r])
        return holes

    def rows(self, index: int) -> list[Row]:
        tri, digits = self.split(index)
        strip = self.strip_holes(digits)
        D = self.shift
        rows = []
        for row in self.triangle.rows(tri):
            marks = list(row.marks)
            if len(marks) == 2:
                lo, hi = marks[1]
                marks[1] = (lo + D, hi + D)
            extra = sorted(strip.get(row.level, []))
            # strip holes sit left of every shifted triangle hole
            marks = marks[:1] + [None] * len(extra) + marks[1:]
            rows.append(Row(row.level, row.xl, row.xr + D, extra + [h + D for h in row.holes], marks))
        return rows

    def regions(self) -> list[Region]:
        n = self.n
        out = [Region("strip", self.base, -1, self.base + self.shift, self.base - 1)]
        out += [Region("square", col, low, col + n, low + n) for _, col, low in self.squares()]
        return out

    def instance(self, index: int) -> Instance:
        return assemble(self.rows(index), index, self.regions())
