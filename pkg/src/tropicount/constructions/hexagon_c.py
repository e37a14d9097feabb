"""Collections in the pentagon P(n, d, d1, d2).

The lower part Q(n, d - d2, d1 - d2) is filled by the pentagon construction.
The n*d2 rows above it are [0, W] with W = n(2d - d1 - d2); their holes run
up a staircase of width-1 boxes, each of height 1 .. a, that starts at a
column >= floor(W/4) and ends at a column <= floor(3W/4) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, factorial

from ..errors import InfeasibleError
from ..geometry import PolygonSpec
from ..segments import Region
from .base import Family, Instance, Row, assemble
from .pentagon import PentagonFamily


@lru_cache(maxsize=None)
def compositions(total: int, parts: int, cap: int) -> int:
    """Number of ways to write total as an ordered sum of parts in [1, cap]."""
    if parts == 0:
        return int(total == 0)
    if total < parts or total > parts * cap:
        return 0
    return sum(compositions(total - p, parts - 1, cap) for p in range(1, min(cap, total) + 1))


def unrank_composition(rank: int, total: int, parts: int, cap: int) -> list[int]:
    """Compositions ordered with larger leading parts first."""
    out = []
    while parts:
        for p in range(min(cap, total - parts + 1), 0, -1):
            cnt = compositions(total - p, parts - 1, cap)
            if rank < cnt:
                out.append(p)
                total -= p
                parts -= 1
                break
            rank -= cnt
        else:
            raise IndexError("composition rank out of range")
    return out


@dataclass(frozen=True)
class Staircase:
    start: int  # x0
    heights: tuple[int, ...]
    bottom: int  # level of the lower side of the first box

    @property
    def end(self) -> int:
        return self.start + len(self.heights)

    def boxes(self):
        """(column, lower level, upper level) per box."""
        y = self.bottom
        for c, h in enumerate(self.heights, start=self.start):
            yield c, y, y + h
            y += h


class HexagonCFamily(Family):
    name = "hexagonC"

    def __init__(self, n: int, d: int, d1: int, d2: int):
        self.spec = PolygonSpec("hexagonC", d, d1, d2, n=n)
        self.n, self.d, self.d1, self.d2 = n, d, d1, d2
        self.width = n * (2 * d - d1 - d2)
        self.a = ceil(2 * d2 / (2 * d - d1 - d2)) + 1
        self.first_col = self.width // 4
        self.last_end = (3 * self.width) // 4 - 1
        self.height = n * d2
        self.lower = PentagonFamily(n, d - d2, d1 - d2, _inner=True)
        self._blocks = []  # (boxes, n_starts, n_compositions)
        for boxes in range(-(-self.height // self.a), self.height + 1):
            starts = self.last_end - boxes - self.first_col + 1
            comps = compositions(self.height, boxes, self.a)
            if starts > 0 and comps:
                self._blocks.append((boxes, starts, comps))
        if not self._blocks:
            raise InfeasibleError(
                f"no staircase of {self.height} levels with box height <= {self.a} fits "
                f"between columns {self.first_col} and {self.last_end}"
            )

    def params(self):
        return (self.n, self.d, self.d1, self.d2)

    @property
    def mark_width(self) -> int:
        return max(1, self.first_col)

    def n_staircases(self) -> int:
        return sum(s * c for _, s, c in self._blocks)

    def staircase(self, rank: int) -> Staircase:
        bottom = self.n * (self.d - self.d2) - 1
        for boxes, starts, comps in self._blocks:
            if rank < starts * comps:
                s, c = divmod(rank, comps)
                heights = unrank_composition(c, self.height, boxes, self.a)
                return Staircase(self.first_col + s, tuple(heights), bottom)
            rank -= starts * comps
        raise IndexError("staircase rank out of range")

    def canonical_staircase(self) -> Staircase:
        return self.staircase(0)

    def size(self) -> int:
        return self.lower.size() * self.n_staircases()

    def split(self, index: int) -> tuple[int, int]:
        if not 0 <= index < self.size():
            raise IndexError(index)
        st, low = divmod(index, self.lower.size())
        return low, st

    def rows(self, index: int) -> list[Row]:
        low, st = self.split(index)
        rows = self.lower.rows(low)
        W, q = self.width, self.mark_width
        for c, y0, y1 in self.staircase(st).boxes():
            for j in range(y0 + 1, y1 + 1):
                rows.append(Row(j, 0, W, [c], [(0, q - 1), (W - q + 1, W)]))
        return rows

    def regions(self, index: int = 0) -> list[Region]:
        _, st = self.split(index)
        boxes = [Region("box", c, y0, c + 1, y1) for c, y0, y1 in self.staircase(st).boxes()]
        return self.lower.regions() + boxes

    def instance(self, index: int) -> Instance:
        return assemble(self.rows(index), index, self.regions(index))
