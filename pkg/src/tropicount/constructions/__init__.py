"""Generators for the four construction families."""

from .base import DEFAULT_ITERATION_CAP, Family, Instance, Row
from .hexagon_c import HexagonCFamily
from .hexagon_d import HexagonDFamily
from .pentagon import PentagonFamily
from .square import RectangleLadder, SquareFamily, rectangle_ladder

FAMILY_CLASSES = {
    "square": SquareFamily,
    "pentagon": PentagonFamily,
    "hexagonC": HexagonCFamily,
    "hexagonD": HexagonDFamily,
}


def make_family(family: str, params, n: int) -> Family:
    """Family generator for polygon parameters (d[, d1[, d2]]) at scale n."""
    try:
        cls = FAMILY_CLASSES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return cls(n, *params)


__all__ = [
    "DEFAULT_ITERATION_CAP",
    "FAMILY_CLASSES",
    "Family",
    "HexagonCFamily",
    "HexagonDFamily",
    "Instance",
    "PentagonFamily",
    "RectangleLadder",
    "Row",
    "SquareFamily",
    "make_family",
    "rectangle_ladder",
]
