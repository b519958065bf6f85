"""Barcodes and the summaries read off them."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import TYPE_CHECKING, NamedTuple

from boundary_tda.const import DEFAULT_DOMINANCE_FACTOR, DEFAULT_TOP_K
from boundary_tda.utils.validators import require_positive, require_positive_int

if TYPE_CHECKING:
    from collections.abc import Iterable


class Interval(NamedTuple):
    """A persistence interval [birth, death) in one homological dimension."""

    dim: int
    birth: float
    death: float

    @property
    def length(self) -> float:
        """Return death - birth (inf for essential classes)."""
        return self.death - self.birth

    @property
    def is_finite(self) -> bool:
        """Whether the class dies."""
        return math.isfinite(self.death)


@dataclass(frozen=True, slots=True)
class Barcode:
    """
    A multiset of persistence intervals.

    Attributes:
        intervals: Intervals sorted by (dim, birth, death).
        r_max: Truncation value of the filtration the barcode came from. A
            class with death inf in a truncated filtration is alive at r_max.
    """

    intervals: tuple[Interval, ...]
    r_max: float = math.inf

    @classmethod
    def from_intervals(cls, intervals: Iterable[Interval], r_max: float = math.inf) -> Barcode:
        """Sort intervals into a barcode."""
        return cls(tuple(sorted(intervals)), r_max=r_max)

    def in_dim(self, dim: int) -> list[Interval]:
        """Return the intervals of one dimension."""
        return [interval for interval in self.intervals if interval.dim == dim]

    def presented(self) -> list[Interval]:
        """Return the intervals of positive length."""
        return [interval for interval in self.intervals if interval.death > interval.birth]

    def scaled(self, factor: float) -> Barcode:
        """Return the barcode with every birth and death multiplied by factor."""
        return Barcode(
            tuple(Interval(i.dim, i.birth * factor, i.death * factor) for i in self.intervals),
            r_max=self.r_max * factor,
        )

    @property
    def truncated(self) -> bool:
        """Whether the filtration stopped at a finite value."""
        return math.isfinite(self.r_max)

    def effective_length(self, interval: Interval) -> float | None:
        """
        Return the length used for ranking bars.

        Finite bars use death - birth; classes alive at a finite r_max use
        r_max - birth; essential classes of an untruncated filtration have no
        ranking length.
        """
        if interval.is_finite:
            return interval.length
        if self.truncated:
            return max(0.0, self.r_max - interval.birth)
        return None


def betti_at(b: Barcode, r: float, dim: int) -> int:
    """
    Return the number of intervals of a dimension with birth ≤ r < death.

    Example:
        >>> betti_at(Barcode((Interval(1, 1.0, 2.0),)), 1.5, 1)
        1
    """
    return sum(1 for interval in b.intervals if interval.dim == dim and interval.birth <= r < interval.death)


def _ranked(b: Barcode, dim: int) -> list[tuple[float, Interval]]:
    ranked = []
    for interval in b.in_dim(dim):
        length = b.effective_length(interval)
        if length is not None and length > 0:
            ranked.append((length, interval))
    ranked.sort(key=lambda item: (-item[0], item[1].birth, item[1].death))
    return ranked


def top_k_intervals(b: Barcode, dim: int, k: int = DEFAULT_TOP_K) -> list[Interval]:
    """
    Return the k most persistent bars of a dimension, longest first.

    Ties are broken by earlier birth. Bars of length zero are never returned.
    On a truncated barcode, classes still alive at r_max are ranked by
    r_max - birth and can be returned, including the essential H0 bar.

    Args:
        b: The barcode.
        dim: Homological dimension.
        k: Number of bars.

    Returns:
        Up to k intervals.

    """
    k = require_positive_int("k", k)
    return [interval for _, interval in _ranked(b, dim)[:k]]


def dominance_count(b: Barcode, dim: int, factor: float = DEFAULT_DOMINANCE_FACTOR) -> int:
    """
    Count the dominant bars of a dimension.

    Returns the smallest j ≥ 1 such that the j-th longest bar is at least
    factor times the (j+1)-th (a missing bar has length 0), or 0 when the
    dimension has no bars.

    Example:
        >>> bars = (Interval(1, 0.0, 1.0), Interval(1, 0.0, 0.9), Interval(1, 0.0, 0.1))
        >>> dominance_count(Barcode(bars), 1)
        2
    """
    factor = require_positive("factor", factor)
    lengths = [length for length, _ in _ranked(b, dim)]
    for j, length in enumerate(lengths, start=1):
        following = lengths[j] if j < len(lengths) else 0.0
        if length >= factor * following:
            return j
    return 0
