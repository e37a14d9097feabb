"""Exact and log-domain lower bounds on the number of marked admissible systems.

For each family the bound is the product of the construction's family size
and its marking count, evaluated as a sum of log-factorials.  ``bound_table``
fits ratio = A - B / ln n to L / (n ln n) and compares A with |boundary|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .constructions.hexagon_d import HexagonDFamily
from .constructions.square import rectangle_ladder
from .geometry import PolygonSpec, boundary_integer_length

SUMMATION_LIMIT = 10**6

_log_table = [0.0]  # _log_table[x] = ln(x!)
_running = [0.0, 0.0]  # Neumaier sum and compensation after the last entry


def _extend_table(x: int) -> None:
    s, c = _running
    for k in range(len(_log_table), x + 1):
        v = math.log(k)
        t = s + v
        if abs(s) >= abs(v):
            c += (s - t) + v
        else:
            c += (v - t) + s
        s = t
        _log_table.append(s + c)
    _running[:] = [s, c]


def stirling_log_factorial(x: int) -> float:
    """ln(x!) from the Stirling series, accurate far below 1e-9 for x >= 1e3."""
    x = float(x)
    inv = 1.0 / x
    inv2 = inv * inv
    series = inv / 12.0 - inv * inv2 / 360.0 + inv * inv2 * inv2 / 1260.0
    return x * math.log(x) - x + 0.5 * math.log(2.0 * math.pi * x) + series


def log_factorial(x: int) -> float:
    if x < 0:
        raise ValueError("log_factorial of a negative number")
    if x <= SUMMATION_LIMIT:
        if x >= len(_log_table):
            _extend_table(x)
        return _log_table[x]
    return stirling_log_factorial(x)


@dataclass(frozen=True)
class CountValue:
    log_value: float
    exact: Optional[int] = None
    rounded: bool = False  # exact is the floor of a non-integral bound

    def consistent(self, rel: float = 1e-9) -> bool:
        if self.exact is None or self.rounded:
            return True
        if self.exact == 0:
            return self.log_value == -math.inf
        # math.log accepts arbitrarily large ints
        return abs(math.log(self.exact) - self.log_value) <= rel * max(1.0, abs(self.log_value))


def _square_term(N: int) -> tuple[float, int]:
    widths = rectangle_ladder(N).widths()
    log = 4 * sum(log_factorial(w) for w in widths)
    exact = math.prod(math.factorial(w) for w in widths) ** 4
    return log, exact


def _pentagon_term(n: int, d: int, d1: int, exact: bool):
    log, ex = _square_term(n * (d - d1)) if exact else (_square_log(n * (d - d1)), None)
    log += d1 * log_factorial(n) + 2 * log_factorial(n * d1)
    if exact:
        ex *= math.factorial(n) ** d1 * math.factorial(n * d1) ** 2
    return log, ex


def _square_log(N: int) -> float:
    return 4 * sum(log_factorial(w) for w in rectangle_ladder(N).widths())


def hexagon_c_constants(n: int, d: int, d1: int, d2: int) -> tuple[int, int]:
    """(floor(W/4), a) for the hexagonC staircase."""
    w = 2 * d - d1 - d2
    return (n * w) // 4, math.ceil(2 * d2 / w) + 1


def lower_bound_log(family: str, params: Sequence[int], n: int, exact: bool = False) -> CountValue:
    """Log of the constructed lower bound on marked admissible n*Delta systems."""
    spec = PolygonSpec(family, *params, n=n)
    d, d1, d2 = spec.d, spec.d1, spec.d2
    if family == "square":
        if exact:
            log, ex = _square_term(n * d)
            return CountValue(log, ex)
        return CountValue(_square_log(n * d))
    if family == "pentagon":
        log, ex = _pentagon_term(n, d, d1, exact)
        return CountValue(log, ex)
    if family == "hexagonC":
        log, ex = _pentagon_term(n, d - d2, d1 - d2, exact)
        q, a = hexagon_c_constants(n, d, d1, d2)
        k = 2 * n * d2
        if q == 0:
            return CountValue(-math.inf, 0 if exact else None)
        log += k * (math.log(q) - log_factorial(a))
        if not exact:
            return CountValue(log)
        value = Fraction(ex * q**k, math.factorial(a) ** k)
        return CountValue(log, value.numerator // value.denominator, value.denominator != 1)
    # hexagonD
    stairs = HexagonDFamily(n, d, d1).stair_counts()
    log = _square_log(n * (d - d1)) + d1 * log_factorial(n) + sum(log_factorial(n * b) for b in stairs)
    if not exact:
        return CountValue(log)
    _, ex = _square_term(n * (d - d1))
    ex *= math.factorial(n) ** d1 * math.prod(math.factorial(n * b) for b in stairs)
    return CountValue(log, ex)


@dataclass
class BoundRow:
    n: int
    log_lb: float
    n_ln_n: float
    ratio: float


@dataclass
class BoundReport:
    family: str
    params: tuple
    target: int
    rows: list[BoundRow] = field(default_factory=list)
    A: Optional[float] = None
    B: Optional[float] = None
    residuals: list[float] = field(default_factory=list)

    @property
    def insufficient(self) -> bool:
        return self.A is None

    @property
    def relative_error(self) -> Optional[float]:
        return None if self.A is None else abs(self.A - self.target) / self.target


def fit_ratio(ns: Sequence[int], ratios: Sequence[float]):
    """Least-squares fit of ratio = A - B / ln n; None when underdetermined."""
    pts = [(n, r) for n, r in zip(ns, ratios) if n > 1 and math.isfinite(r)]
    if len(pts) < 2 or len({n for n, _ in pts}) < 2:
        return None
    x = np.array([1.0 / math.log(n) for n, _ in pts])
    y = np.array([r for _, r in pts])
    design = np.column_stack([np.ones_like(x), -x])
    (A, B), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - design @ np.array([A, B])
    return float(A), float(B), [float(r) for r in resid]


def bound_table(family: str, params: Sequence[int], n_list: Sequence[int]) -> BoundReport:
    params = tuple(params)
    target = boundary_integer_length(PolygonSpec(family, *params))
    report = BoundReport(family, params, target)
    for n in sorted(n_list):
        lb = lower_bound_log(family, params, n).log_value
        nl = n * math.log(n)
        ratio = lb / nl if nl > 0 else math.nan
        report.rows.append(BoundRow(n, lb, nl, ratio))
    fit = fit_ratio([r.n for r in report.rows], [r.ratio for r in report.rows])
    if fit is not None:
        report.A, report.B, report.residuals = fit
    return report


def parse_n_list(text: str) -> list[int]:
    """'64:8192:x2' (geometric, ratio 2), '2:10' (step 1), or '4,8,16'."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"bad n-list {text!r}")
        lo, hi = int(parts[0]), int(parts[1])
        step = parts[2] if len(parts) == 3 else "1"
        if lo < 1 or hi < lo:
            raise ValueError(f"bad n-list range {text!r}")
        out = []
        if step.startswith("x"):
            ratio = int(step[1:])
            if ratio < 2:
                raise ValueError("geometric ratio must be >= 2")
            v = lo
            while v <= hi:
                out.append(v)
                v *= ratio
        else:
            out = list(range(lo, hi + 1, int(step)))
        return out
    out = [int(v) for v in text.split(",") if v.strip()]
    if not out or any(v < 1 for v in out):
        raise ValueError(f"bad n-list {text!r}")
    return out
