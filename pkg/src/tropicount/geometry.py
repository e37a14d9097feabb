"""Lattice polygons of the four families and their sigma profiles.

Each polygon is symmetric under the swap (x, y) -> (y, x).  The traced lines
through boundary lattice points are the anti-diagonals x + y = c, and the
bisectrix chord is identified with [0, m] through the sorted list of levels c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import ConsistencyError, ParameterError

FAMILIES = ("square", "pentagon", "hexagonC", "hexagonD")


@dataclass(frozen=True)
class PolygonSpec:
    family: str
    d: int
    d1: Optional[int] = None
    d2: Optional[int] = None
    n: int = 1

    def __post_init__(self):
        validate_spec(self)

    @property
    def params(self) -> tuple:
        return tuple(p for p in (self.d, self.d1, self.d2) if p is not None)

    def scaled(self, n: int) -> "PolygonSpec":
        return PolygonSpec(self.family, self.d, self.d1, self.d2, n)

    def unscaled(self) -> "PolygonSpec":
        return self.scaled(1)

    def label(self) -> str:
        inner = ",".join(str(p) for p in self.params)
        return f"{self.family}({inner}) n={self.n}"


def validate_spec(spec: PolygonSpec) -> None:
    f, d, d1, d2, n = spec.family, spec.d, spec.d1, spec.d2, spec.n
    if f not in FAMILIES:
        raise ParameterError("family", f"unknown family {f!r}; expected one of {FAMILIES}")
    if not isinstance(n, int) or n < 1:
        raise ParameterError("n >= 1")
    if not isinstance(d, int) or d < 1:
        raise ParameterError("d >= 1")
    if f == "square":
        if d1 is not None or d2 is not None:
            raise ParameterError("square takes no d1/d2")
        return
    if d1 is None:
        raise ParameterError("d1 required")
    if f in ("pentagon", "hexagonD"):
        if d2 is not None:
            raise ParameterError(f"{f} takes no d2")
        if not 1 <= d1 < d:
            raise ParameterError("1 <= d1 < d")
        return
    if d2 is None:
        raise ParameterError("d2 required")
    if not 1 <= d2 <= d1 < d:
        raise ParameterError("1 <= d2 <= d1 < d")


def make_spec(family, d, d1=None, d2=None, n=1) -> PolygonSpec:
    return PolygonSpec(family, d, d1, d2, n)


def build_polygon(spec: PolygonSpec) -> list[tuple[int, int]]:
    """Counterclockwise vertex cycle of the scaled polygon n*Delta."""
    n = spec.n
    d = spec.d * n
    if spec.family == "square":
        verts = [(0, 0), (d, 0), (d, d), (0, d)]
    elif spec.family == "pentagon":
        d1 = spec.d1 * n
        verts = [(d, d), (0, d), (0, d1), (d1, 0), (d, 0)]
    elif spec.family == "hexagonC":
        d1, d2 = spec.d1 * n, spec.d2 * n
        verts = [(0, d1), (d1, 0), (d, 0), (d, d - d2), (d - d2, d), (0, d)]
    else:
        d1 = spec.d1 * n
        verts = [(0, 0), (d - d1, 0), (d, d1), (d, d), (d1, d), (0, d - d1)]
    return verts


def _edges(verts):
    return [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def boundary_integer_length(spec_or_verts) -> int:
    verts = _as_verts(spec_or_verts)
    return sum(gcd(abs(q[0] - p[0]), abs(q[1] - p[1])) for p, q in _edges(verts))


def boundary_points(spec_or_verts) -> list[tuple[int, int]]:
    verts = _as_verts(spec_or_verts)
    pts = []
    for (x0, y0), (x1, y1) in _edges(verts):
        g = gcd(abs(x1 - x0), abs(y1 - y0))
        sx, sy = (x1 - x0) // g, (y1 - y0) // g
        pts.extend((x0 + t * sx, y0 + t * sy) for t in range(g))
    return pts


def interval_budget(spec: PolygonSpec) -> int:
    """Number of intervals in a proper system: |boundary| - m - 1."""
    return boundary_integer_length(spec) - sigma_profile(spec).m - 1


def _as_verts(spec_or_verts):
    if isinstance(spec_or_verts, PolygonSpec):
        return build_polygon(spec_or_verts)
    return list(spec_or_verts)


@dataclass(frozen=True)
class SigmaProfile:
    m: int
    sigma: tuple[int, ...]
    levels: tuple[int, ...]
    budget: int

    def __post_init__(self):
        if len(self.sigma) != self.m + 1 or len(self.levels) != self.m + 1:
            raise ConsistencyError("profile length mismatch")
        if any(s < 0 for s in self.sigma):
            raise ConsistencyError("negative sigma")

    @property
    def total(self) -> int:
        return sum(self.sigma)


def _chord(verts, c):
    """Exact x-range of the line x + y = c inside the convex polygon."""
    lo, hi = None, None
    for (x0, y0), (x1, y1) in _edges(verts):
        # inside is to the left: (x1-x0)*(y-y0) - (y1-y0)*(x-x0) >= 0 with y = c - x
        ex, ey = x1 - x0, y1 - y0
        coef = -ex - ey
        const = ex * (c - y0) + ey * x0
        if coef == 0:
            if const < 0:
                return None
            continue
        bound = Fraction(-const, coef)
        if coef > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def sigma_profile(spec: PolygonSpec) -> SigmaProfile:
    verts = build_polygon(spec)
    # bisectrix corners contribute the degenerate line x + y = 2i
    levels = sorted({x + y for x, y in boundary_points(verts)})
    sigma = []
    for c in levels:
        chord = _chord(verts, c)
        if chord is None:
            raise ConsistencyError(f"traced line x+y={c} misses the polygon")
        lo, hi = chord
        if lo.denominator != 1 or hi.denominator != 1:
            raise ConsistencyError(f"chord x+y={c} has a non-lattice endpoint")
        sigma.append(int(hi - lo))
    m = len(levels) - 1
    budget = boundary_integer_length(verts) - m - 1
    return SigmaProfile(m, tuple(sigma), tuple(levels), budget)


def closed_form_profile(spec: PolygonSpec) -> tuple[int, tuple[int, ...]]:
    """(m, sigma) from the per-family closed forms."""
    n, d = spec.n, spec.d
    N = n * d
    if spec.family == "square":
        m = 2 * N
        return m, tuple(min(i, m - i) for i in range(m + 1))
    D1 = n * spec.d1
    if spec.family == "pentagon":
        m = n * (2 * d - spec.d1)
        return m, tuple(min(D1 + i, 2 * N - D1 - i) for i in range(m + 1))
    if spec.family == "hexagonC":
        m = n * (2 * d - spec.d1 - spec.d2)
        return m, tuple(min(D1 + i, 2 * N - D1 - i) for i in range(m + 1))
    m = n * (2 * d - spec.d1)
    return m, tuple(min(i, N - D1, m - i) for i in range(m + 1))


def closed_form_budget(spec: PolygonSpec) -> int:
    N = spec.n * spec.d
    if spec.family == "hexagonD":
        return 2 * N - spec.n * spec.d1 - 1
    return 2 * N - 1


def boundary_length_closed_form(spec: PolygonSpec) -> int:
    d, d1, d2 = spec.d, spec.d1 or 0, spec.d2 or 0
    coeff = {
        "square": 4 * d,
        "pentagon": 4 * d - d1,
        "hexagonC": 4 * d - d1 - d2,
        "hexagonD": 4 * d - 2 * d1,
    }[spec.family]
    return spec.n * coeff


def chord_points(spec: PolygonSpec, c: int) -> list[tuple[int, int]]:
    """Lattice points of the polygon on the line x + y = c."""
    chord = _chord(build_polygon(spec), c)
    if chord is None:
        return []
    lo, hi = chord
    return [(x, c - x) for x in range(int(lo), int(hi) + 1)]


def legal_specs(max_d: int, max_n: int = 1):
    """All legal specs with d <= max_d and n <= max_n, in a fixed order."""
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            yield PolygonSpec("square", d, n=n)
            for d1 in range(1, d):
                yield PolygonSpec("pentagon", d, d1, n=n)
                for d2 in range(1, d1 + 1):
                    yield PolygonSpec("hexagonC", d, d1, d2, n=n)
                yield PolygonSpec("hexagonD", d, d1, n=n)
