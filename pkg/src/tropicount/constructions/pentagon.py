"""Collections in the quadrangle Q(n, d, d1).

The lower triangle T(n, d - d1) carries a permuted perforated collection.
Above it, level j = N' + t (N' = n(d - d1), t = 0 .. n*d1 - 1) carries
[0, N' + j]; its hole lies in square s = t // n of the up-right staircase
of side-n squares starting at (N', N' - 1), one hole per column per square.
"""

from __future__ import annotations

from math import factorial

from ..geometry import PolygonSpec
from ..segments import Region
from .base import Family, Instance, Row, assemble, split_index, unrank_permutation
from .square import SquareFamily


class PentagonFamily(Family):
    name = "pentagon"

    def __init__(self, n: int, d: int, d1: int, _inner: bool = False):
        # _inner allows d1 = 0 (bare triangle) for use inside hexagonC
        self.spec = None if _inner else PolygonSpec("pentagon", d, d1, n=n)
        self.n, self.d, self.d1 = n, d, d1
        self.base = n * (d - d1)
        self.triangle = SquareFamily.triangle(self.base)
        self._radices = [factorial(n)] * d1

    def params(self):
        return (self.n, self.d, self.d1)

    def upper_levels(self) -> range:
        return range(self.base, self.n * self.d)

    def size(self) -> int:
        return self.triangle.size() * factorial(self.n) ** self.d1

    def marking_factor(self) -> int:
        """Restricted markings per collection (exact: all pieces are distinct)."""
        n, k = self.n, self.n * self.d1
        return self.triangle.marking_factor() * factorial(k) * factorial(n) ** self.d1

    def marked_size(self, cap=None) -> int:
        return self.size() * self.marking_factor()

    def split(self, index: int) -> tuple[int, list[int]]:
        if not 0 <= index < self.size():
            raise IndexError(index)
        rest, tri = divmod(index, self.triangle.size())
        return tri, split_index(rest, self._radices)

    def staircase(self) -> list[Region]:
        n, b = self.n, self.base
        return [
            Region("square", b + s * n, b - 1 + s * n, b + (s + 1) * n, b - 1 + (s + 1) * n)
            for s in range(self.d1)
        ]

    def rows(self, index: int) -> list[Row]:
        n, b = self.n, self.base
        tri, digits = self.split(index)
        rows = self.triangle.rows(tri)
        for s, rank in enumerate(digits):
            perm = unrank_permutation(rank, n)
            for r in range(n):
                t = s * n + r
                j = b + t
                hole = b + s * n + perm[r]
                rows.append(
                    Row(j, 0, b + j, [hole], [(0, t), (2 * b + s * n, 2 * b + t)])
                )
        return rows

    def regions(self) -> list[Region]:
        return self.triangle.regions() + self.staircase()

    def instance(self, index: int) -> Instance:
        return assemble(self.rows(index), index, self.regions())
