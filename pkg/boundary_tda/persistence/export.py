"""
Barcode CSV and SVG export.

CSV has the header ``dim,birth,death`` and writes infinite deaths as the
literal ``inf``. SVG shows one horizontal bar per interval, grouped by
dimension, on either the Rips diameter scale or the ball-radius scale
(half the diameter).
"""

from __future__ import annotations

from enum import StrEnum
import math
from typing import TYPE_CHECKING

from boundary_tda.exceptions import PointCloudFormatError
from boundary_tda.utils.plotting import figure_to_svg, plt
from boundary_tda.utils.string_helpers import format_number, parse_number

from .barcode import Barcode, Interval, top_k_intervals

if TYPE_CHECKING:
    from pathlib import Path

CSV_HEADER = "dim,birth,death"
_DIM_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red")


class RadiusScale(StrEnum):
    """Axis scale of a barcode plot."""

    DIAMETER = "diameter"
    RADIUS = "radius"

    @property
    def factor(self) -> float:
        """Multiplier from filtration values to this scale."""
        return 1.0 if self is RadiusScale.DIAMETER else 0.5


def format_barcode_csv(b: Barcode) -> str:
    """Serialize every interval, zero-length ones included."""
    rows = [CSV_HEADER]
    rows.extend(f"{i.dim},{format_number(i.birth)},{format_number(i.death)}" for i in b.intervals)
    return "\n".join(rows) + "\n"


def parse_barcode_csv(text: str, r_max: float = math.inf) -> Barcode:
    """
    Parse barcode CSV.

    Raises:
        PointCloudFormatError: If the header or a row is malformed.

    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CSV_HEADER:
        msg = f"Barcode CSV must start with {CSV_HEADER!r}"
        raise PointCloudFormatError(msg)
    intervals = []
    for line_no, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != 3:  # noqa: PLR2004
            msg = f"Line {line_no}: expected 3 fields, got {len(fields)}"
            raise PointCloudFormatError(msg)
        try:
            interval = Interval(int(fields[0]), parse_number(fields[1]), parse_number(fields[2]))
        except ValueError as exception:
            msg = f"Line {line_no}: malformed interval {line!r}"
            raise PointCloudFormatError(msg) from exception
        if interval.death < interval.birth:
            msg = f"Line {line_no}: death precedes birth"
            raise PointCloudFormatError(msg)
        intervals.append(interval)
    return Barcode.from_intervals(intervals, r_max=r_max)


def write_barcode_csv(b: Barcode, path: Path) -> None:
    """Write barcode CSV to a file."""
    path.write_text(format_barcode_csv(b), encoding="utf-8")


def read_barcode_csv(path: Path, r_max: float = math.inf) -> Barcode:
    """Read barcode CSV from a file."""
    return parse_barcode_csv(path.read_text(encoding="utf-8"), r_max=r_max)


def barcode_svg(
    b: Barcode,
    *,
    scale: RadiusScale = RadiusScale.DIAMETER,
    top_k: int | None = None,
    title: str = "Persistence barcode",
) -> str:
    """
    Render a barcode as SVG.

    Args:
        b: The barcode.
        scale: Axis scale.
        top_k: Show only the k most persistent bars per dimension; all
            positive-length bars when None.
        title: Plot title.

    Returns:
        SVG text, identical for identical inputs.

    """
    dims = sorted({interval.dim for interval in b.intervals})
    groups = [
        (dim, top_k_intervals(b, dim, top_k) if top_k else [i for i in b.presented() if i.dim == dim])
        for dim in dims
    ]
    groups = [(dim, bars) for dim, bars in groups if bars]
    finite = [v for _, bars in groups for i in bars for v in (i.birth, i.death) if math.isfinite(v)]
    if b.truncated:
        right = b.r_max
    else:
        right = 1.1 * max(finite, default=0.0) or 1.0
    right *= scale.factor

    fig, axes = plt.subplots(
        max(1, len(groups)), 1, figsize=(6.0, 1.2 + 1.6 * max(1, len(groups))), squeeze=False
    )
    for row, (dim, bars) in enumerate(groups):
        ax = axes[row][0]
        color = _DIM_COLORS[dim % len(_DIM_COLORS)]
        for y, interval in enumerate(bars):
            end = interval.death * scale.factor if interval.is_finite else right
            ax.hlines(y, interval.birth * scale.factor, end, colors=color, linewidth=2)
        ax.set_xlim(0.0, right)
        ax.set_ylim(-1, len(bars))
        ax.set_yticks([])
        ax.set_ylabel(f"H{dim}")
    if not groups:
        axes[0][0].set_yticks([])
    axes[-1][0].set_xlabel(f"r ({scale} scale)")
    axes[0][0].set_title(title)
    fig.tight_layout()
    return figure_to_svg(fig)
