"""Validation utilities for boundary_tda."""

from __future__ import annotations

import math
from numbers import Integral, Real
from typing import Any

from boundary_tda.exceptions import DomainError


def require_finite(name: str, value: Any) -> float:
    """
    Validate that a value is a finite real number.

    Args:
        name: Parameter name used in the error message.
        value: The value to validate.

    Returns:
        The value as a float.

    Raises:
        DomainError: If the value is not a finite real.

    """
    if isinstance(value, bool) or not isinstance(value, Real):
        msg = f"{name} must be a real number, got {type(value).__name__}"
        raise DomainError(msg)
    result = float(value)
    if not math.isfinite(result):
        msg = f"{name} must be finite, got {result!r}"
        raise DomainError(msg)
    return result


def require_positive(name: str, value: Any) -> float:
    """
    Validate that a value is a finite real strictly greater than zero.

    Example:
        >>> require_positive("r", 0.5)
        0.5
    """
    result = require_finite(name, value)
    if result <= 0:
        msg = f"{name} must be > 0, got {result!r}"
        raise DomainError(msg)
    return result


def require_positive_int(name: str, value: Any, min_val: int = 1) -> int:
    """
    Validate an integer parameter with a lower bound.

    Args:
        name: Parameter name used in the error message.
        value: The value to validate.
        min_val: Smallest admissible value.

    Returns:
        The value as an int.

    Raises:
        DomainError: If the value is not an integer or is below min_val.

    """
    if isinstance(value, bool) or not isinstance(value, Integral):
        msg = f"{name} must be an integer, got {type(value).__name__}"
        raise DomainError(msg)
    if value < min_val:
        msg = f"{name} must be >= {min_val}, got {value}"
        raise DomainError(msg)
    return int(value)


def require_in_range(
    name: str,
    value: Any,
    min_val: float | None = None,
    max_val: float | None = None,
    *,
    min_inclusive: bool = True,
    max_inclusive: bool = True,
) -> float:
    """
    Validate that a real value lies in an interval.

    Args:
        name: Parameter name used in the error message.
        value: The value to validate.
        min_val: Optional lower end of the interval.
        max_val: Optional upper end of the interval.
        min_inclusive: Whether the lower end belongs to the interval.
        max_inclusive: Whether the upper end belongs to the interval.

    Returns:
        The value as a float.

    Raises:
        DomainError: If the value lies outside the interval.

    Example:
        >>> require_in_range("x", 0.3, 0.0, 1.0)
        0.3
        >>> require_in_range("x", 1.0, 0.0, 1.0, max_inclusive=False)
        Traceback (most recent call last):
        ...
        boundary_tda.exceptions.DomainError: x must be in [0.0, 1.0), got 1.0
    """
    result = require_finite(name, value)
    below = min_val is not None and (result < min_val if min_inclusive else result <= min_val)
    above = max_val is not None and (result > max_val if max_inclusive else result >= max_val)
    if below or above:
        left = "[" if min_inclusive else "("
        right = "]" if max_inclusive else ")"
        low = "-inf" if min_val is None else repr(float(min_val))
        high = "inf" if max_val is None else repr(float(max_val))
        msg = f"{name} must be in {left}{low}, {high}{right}, got {result!r}"
        raise DomainError(msg)
    return result
