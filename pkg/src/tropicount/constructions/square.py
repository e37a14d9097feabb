"""Perforated and permuted collections in the triangle T(n, d).

Rows of T: level j carries [N - j, N + j], j = 0 .. N - 1, with N = n*d.
Every level j >= 1 receives one hole in the half-plane x >= N.  Levels are
grouped into ladder blocks (y_{i+1}, y_i]; the holes of a block sit in the
columns N .. x_i - 1 of its rectangle, one per column, and the right-hand
parts of the block's rows are permuted across its levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from ..errors import ParameterError
from ..geometry import PolygonSpec
from ..segments import Region
from .base import Family, Instance, Row, assemble, split_index, unrank_permutation


@dataclass(frozen=True)
class RectangleLadder:
    N: int
    y: tuple[int, ...]  # y_1 > ... > y_{k+1}
    x: tuple[int, ...]  # x_1 .. x_k

    @property
    def k(self) -> int:
        return len(self.x)

    def block(self, i: int) -> range:
        """Levels of block i (0-based), i.e. y_{i+1}+1 .. y_i in 1-based terms."""
        return range(self.y[i + 1] + 1, self.y[i] + 1)

    def widths(self) -> list[int]:
        return [self.y[i] - self.y[i + 1] for i in range(self.k)]

    def rectangle(self, i: int) -> Region:
        return Region("rectangle", 2 * self.N - self.x[i], self.y[i + 1], self.x[i], self.y[i])


def rectangle_ladder(N: int) -> RectangleLadder:
    if N < 1:
        raise ParameterError("N >= 1")
    y = [N - 1]
    while y[-1] >= 2:
        y.append(y[-1] // 2)
    x = [N - (-yi // 2) for yi in y[:-1]]
    return RectangleLadder(N, tuple(y), tuple(x))


def ladder_factor(N: int) -> int:
    """Product of (y_i - y_{i+1})! over the ladder."""
    return prod(factorial(w) for w in rectangle_ladder(N).widths())


def triangle_rows(ladder: RectangleLadder, digits) -> list[Row]:
    """Rows of one permuted perforated collection with their mark ranges.

    ``digits`` alternates (hole plan rank, right-part permutation rank) per
    block.  Marks avoid the point N on level 1 and, on block levels, the
    central stretch [N - y_{i+1}, N + y_{i+1}].
    """
    N = ladder.N
    rows = [Row(0, N, N, [], [(N, N)])]
    if N >= 2:
        rows.append(Row(1, N - 1, N + 1, [N], [(N - 1, N - 1), (N + 1, N + 1)]))
    for i, width in enumerate(ladder.widths()):
        base = ladder.y[i + 1]
        plan = unrank_permutation(digits[2 * i], width)
        perm = unrank_permutation(digits[2 * i + 1], width)
        for t, j in enumerate(ladder.block(i)):
            hole = N + plan[t]
            right = N + base + 1 + perm[t]
            rows.append(
                Row(j, N - j, right, [hole], [(N - j, N - base - 1), (N + base + 1, right)])
            )
    return rows


class SquareFamily(Family):
    name = "square"

    def __init__(self, n: int, d: int, _N: int | None = None):
        if _N is None:
            self.spec = PolygonSpec("square", d, n=n)
            self.N = n * d
        else:
            # bare triangle of a given size, used inside the other families
            self.spec = None
            self.N = _N
        self.n, self.d = n, d
        self.ladder = rectangle_ladder(self.N)
        self._radices = [factorial(w) for w in self.ladder.widths() for _ in (0, 1)]

    @classmethod
    def triangle(cls, N: int) -> "SquareFamily":
        return cls(1, N, _N=N)

    def params(self):
        return (self.n, self.d)

    def plain_size(self) -> int:
        """M(n, d): number of perforated collections before permuting."""
        return ladder_factor(self.N)

    def size(self) -> int:
        return ladder_factor(self.N) ** 2

    def marking_factor(self) -> int:
        """Restricted markings per collection."""
        return ladder_factor(self.N) ** 2

    def marked_size(self, cap=None) -> int:
        return self.size() * self.marking_factor()

    def digits(self, index: int) -> list[int]:
        if not 0 <= index < self.size():
            raise IndexError(index)
        return split_index(index, self._radices)

    def rows(self, index: int) -> list[Row]:
        return triangle_rows(self.ladder, self.digits(index))

    def regions(self) -> list[Region]:
        return [self.ladder.rectangle(i) for i in range(self.ladder.k)]

    def instance(self, index: int) -> Instance:
        return assemble(self.rows(index), index, self.regions())
