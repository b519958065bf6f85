"""String helper utilities for boundary_tda."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable


def format_number(value: float) -> str:
    """
    Format a float so that parsing it back gives the identical value.

    Infinities are written as the literal ``inf`` (or ``-inf``).

    Example:
        >>> format_number(0.1)
        '0.1'
        >>> format_number(float("inf"))
        'inf'
    """
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(value)


def parse_number(text: str) -> float:
    """
    Parse a number written by format_number.

    Raises:
        ValueError: If the text is not a number.

    """
    return float(text.strip())


def format_point(coords: Iterable[float]) -> str:
    """
    Format a point as comma-separated coordinates.

    Example:
        >>> format_point([1.0, 0.0, 0.5])
        '1.0,0.0,0.5'
    """
    return ",".join(format_number(c) for c in coords)
