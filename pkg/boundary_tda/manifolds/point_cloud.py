"""
Point clouds and their text file format.

A cloud file starts with a header line ``# dim=<N> source=<kind> seed=<seed>``
followed by one point per line, coordinates separated by single commas and
written with enough digits to round-trip exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import re
from typing import TYPE_CHECKING

import numpy as np

from boundary_tda.exceptions import DimensionMismatchError, PointCloudFormatError
from boundary_tda.utils.string_helpers import format_point, parse_number

if TYPE_CHECKING:
    from pathlib import Path

    from boundary_tda.data import FloatArray, PointLike

_HEADER_RE = re.compile(r"^#\s*dim=(\d+)\s+source=(\S+)\s+seed=(\S+)\s*$")


@dataclass(frozen=True, eq=False, slots=True)
class PointCloud:
    """
    An ordered set of points in ambient space.

    Attributes:
        points: Array of shape (n, N), read-only.
        seed: RNG seed that produced the points, or None for deterministic constructions.
        source: Identifier of the manifold the points were drawn from.
    """

    points: FloatArray
    seed: int | None = None
    source: str = "unknown"
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        """Freeze the coordinates as a 2-D float array."""
        array = np.array(self.points, dtype=np.float64, copy=True)
        if array.ndim == 1 and array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2:  # noqa: PLR2004
            msg = f"Point array must be 2-dimensional, got shape {array.shape}"
            raise DimensionMismatchError(msg)
        array.flags.writeable = False
        object.__setattr__(self, "points", array)
        object.__setattr__(self, "dim", int(array.shape[1]))

    def __len__(self) -> int:
        """Return the number of points."""
        return int(self.points.shape[0])

    @classmethod
    def from_points(cls, points: PointLike, *, seed: int | None = None, source: str = "unknown") -> PointCloud:
        """Build a cloud from anything array-like."""
        return cls(np.asarray(points, dtype=np.float64), seed=seed, source=source)

    def subset(self, indices: PointLike) -> PointCloud:
        """Return the cloud restricted to the given indices, in that order."""
        return PointCloud(self.points[np.asarray(indices, dtype=np.intp)], seed=self.seed, source=self.source)


def format_point_cloud(cloud: PointCloud) -> str:
    """Serialize a cloud to the text format."""
    seed = "none" if cloud.seed is None else str(cloud.seed)
    lines = [f"# dim={cloud.dim} source={cloud.source} seed={seed}"]
    lines.extend(format_point(row) for row in cloud.points)
    return "\n".join(lines) + "\n"


def parse_point_cloud(text: str) -> PointCloud:
    """
    Parse the text format.

    Args:
        text: File contents.

    Returns:
        The parsed cloud.

    Raises:
        PointCloudFormatError: If the header is missing or a row is malformed.

    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        msg = "Point cloud file is empty"
        raise PointCloudFormatError(msg)
    match = _HEADER_RE.match(lines[0])
    if match is None:
        msg = f"Malformed point cloud header: {lines[0]!r}"
        raise PointCloudFormatError(msg)
    dim = int(match.group(1))
    source = match.group(2)
    seed_text = match.group(3)
    try:
        seed = None if seed_text == "none" else int(seed_text)
    except ValueError as exception:
        msg = f"Malformed seed in header: {seed_text!r}"
        raise PointCloudFormatError(msg) from exception

    rows: list[list[float]] = []
    for line_no, line in enumerate(lines[1:], start=2):
        fields = line.split(",")
        if len(fields) != dim:
            msg = f"Line {line_no}: expected {dim} coordinates, got {len(fields)}"
            raise PointCloudFormatError(msg)
        try:
            rows.append([parse_number(value) for value in fields])
        except ValueError as exception:
            msg = f"Line {line_no}: malformed coordinate in {line!r}"
            raise PointCloudFormatError(msg) from exception
    points = np.array(rows, dtype=np.float64).reshape(len(rows), dim)
    return PointCloud(points, seed=seed, source=source)


def write_point_cloud(cloud: PointCloud, path: Path) -> None:
    """Write a cloud to a file."""
    path.write_text(format_point_cloud(cloud), encoding="utf-8")


def read_point_cloud(path: Path) -> PointCloud:
    """Read a cloud from a file."""
    return parse_point_cloud(path.read_text(encoding="utf-8"))
