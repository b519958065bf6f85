"""
Boundary-matrix reduction over the two-element field.

Columns are sets of row indices; adding two columns is a symmetric
difference. With clearing, dimensions are reduced from the top down and a
column whose simplex already appeared as a pivot is skipped, since it must
reduce to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import TYPE_CHECKING, NamedTuple

from boundary_tda.const import LOGGER
from boundary_tda.exceptions import FiltrationError

from .barcode import Barcode, Interval

if TYPE_CHECKING:
    from .filtration import Filtration


class PersistencePair(NamedTuple):
    """Filtration positions of a birth simplex and its death simplex (None if essential)."""

    birth: int
    death: int | None


@dataclass(frozen=True, slots=True)
class ReductionResult:
    """Pairs and bookkeeping of one reduction."""

    pairs: tuple[PersistencePair, ...]
    column_additions: int
    cleared: int


def _boundary_columns(f: Filtration) -> list[set[int]]:
    index = f.index()
    columns: list[set[int]] = []
    for position, simplex in enumerate(f.simplices):
        column: set[int] = set()
        for face in simplex.faces():
            row = index.get(face)
            if row is None:
                msg = f"Face {face} of simplex {simplex.vertices} is missing from the filtration"
                raise FiltrationError(msg)
            if row >= position:
                msg = f"Face {face} enters after simplex {simplex.vertices}"
                raise FiltrationError(msg)
            column.add(row)
        columns.append(column)
    return columns


def reduce_boundary(f: Filtration, *, clearing: bool = True) -> ReductionResult:
    """
    Reduce the boundary matrix of a filtration and read off persistence pairs.

    Args:
        f: The filtration.
        clearing: Reduce top dimension first and skip columns known to vanish.
            When False, columns are reduced in plain filtration order.

    Returns:
        Finite pairs (birth, death) and essential pairs (birth, None), sorted
        by birth position.

    Raises:
        FiltrationError: If a face is missing or misordered.

    """
    columns = _boundary_columns(f)
    dims = [simplex.dim for simplex in f.simplices]
    pivot_owner: dict[int, int] = {}
    positive: list[int] = []
    cleared: set[int] = set()
    additions = 0

    if clearing:
        top = max(dims, default=0)
        order = [j for d in range(top, -1, -1) for j in range(len(columns)) if dims[j] == d]
    else:
        order = list(range(len(columns)))

    for j in order:
        if j in cleared:
            continue
        column = columns[j]
        while column:
            low = max(column)
            owner = pivot_owner.get(low)
            if owner is None:
                pivot_owner[low] = j
                if clearing:
                    cleared.add(low)
                break
            column.symmetric_difference_update(columns[owner])
            additions += 1
        if not column:
            positive.append(j)

    pairs = [PersistencePair(birth, death) for birth, death in pivot_owner.items()]
    pairs.extend(PersistencePair(j, None) for j in positive if j not in pivot_owner)
    pairs.sort()
    LOGGER.debug(
        "Reduced %d columns (%s): %d pairs, %d essential, %d column additions, %d cleared",
        len(columns),
        "clearing" if clearing else "plain",
        len(pivot_owner),
        len(pairs) - len(pivot_owner),
        additions,
        len(cleared),
    )
    return ReductionResult(pairs=tuple(pairs), column_additions=additions, cleared=len(cleared))


def compute_persistence(f: Filtration, *, clearing: bool = True) -> Barcode:
    """
    Compute the barcode of a filtration.

    Zero-length intervals are kept; presentation helpers filter them.

    Example:
        >>> from boundary_tda.persistence.filtration import Filtration, Simplex
        >>> compute_persistence(Filtration.from_simplices([Simplex((0,), 0.0)])).intervals
        (Interval(dim=0, birth=0.0, death=inf),)
    """
    result = reduce_boundary(f, clearing=clearing)
    intervals = []
    for pair in result.pairs:
        birth = f.simplices[pair.birth]
        death = math.inf if pair.death is None else f.simplices[pair.death].value
        intervals.append(Interval(birth.dim, birth.value, death))
    return Barcode.from_intervals(intervals, r_max=f.r_max)
