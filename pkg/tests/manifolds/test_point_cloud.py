"""Tests for point clouds and their file format."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from boundary_tda.exceptions import DimensionMismatchError, PointCloudFormatError
from boundary_tda.manifolds import (
    PointCloud,
    format_point_cloud,
    parse_point_cloud,
    read_point_cloud,
    write_point_cloud,
)


@pytest.mark.unit
def test_point_cloud_is_read_only() -> None:
    """Coordinates are copied and frozen."""
    source = np.array([[0.0, 1.0], [1.0, 0.0]])
    cloud = PointCloud(source)
    source[0, 0] = 5.0
    assert cloud.points[0, 0] == 0.0
    with pytest.raises(ValueError, match="read-only"):
        cloud.points[0, 0] = 1.0


@pytest.mark.unit
def test_point_cloud_shape_checks() -> None:
    """Points must form a 2-D array."""
    with pytest.raises(DimensionMismatchError):
        PointCloud(np.zeros((2, 2, 2)))
    assert PointCloud.from_points([[1.0, 2.0, 3.0]]).dim == 3


@pytest.mark.unit
def test_subset_keeps_provenance() -> None:
    """A subset keeps the seed and source of its parent."""
    cloud = PointCloud.from_points([[0.0], [1.0], [2.0]], seed=4, source="cylinder")
    part = cloud.subset([2, 0])
    np.testing.assert_array_equal(part.points, [[2.0], [0.0]])
    assert (part.seed, part.source) == (4, "cylinder")


@pytest.mark.unit
def test_example_points(example_points: PointCloud) -> None:
    """Eight points on the arc with exact endpoints and equal chords."""
    assert len(example_points) == 8
    np.testing.assert_array_equal(example_points.points[0], (1.0, 0.0))
    np.testing.assert_array_equal(example_points.points[-1], (-1.0, 0.0))
    chords = np.linalg.norm(np.diff(example_points.points, axis=0), axis=1)
    np.testing.assert_allclose(chords, 2 * np.sin(np.pi / 14), rtol=1e-12)


@pytest.mark.unit
def test_file_round_trip(tmp_path: Path) -> None:
    """Writing then reading reproduces coordinates bit for bit, with the header."""
    cloud = PointCloud.from_points([[0.1, 1 / 3, -2.5e-17], [1e300, 0.0, 7.0]], seed=12, source="cylinder")
    path = tmp_path / "cloud.txt"
    write_point_cloud(cloud, path)
    assert path.read_text(encoding="utf-8").splitlines()[0] == "# dim=3 source=cylinder seed=12"
    loaded = read_point_cloud(path)
    np.testing.assert_array_equal(loaded.points, cloud.points)
    assert (loaded.seed, loaded.source, loaded.dim) == (12, "cylinder", 3)


@pytest.mark.unit
def test_seedless_clouds_serialize_seed_none(example_points: PointCloud) -> None:
    """Deterministic constructions record seed=none."""
    text = format_point_cloud(example_points)
    assert text.startswith("# dim=2 source=semicircle seed=none\n")
    assert parse_point_cloud(text).seed is None


@pytest.mark.unit
@pytest.mark.parametrize(
    "text",
    [
        "",
        "1.0,2.0\n",
        "# dim=2 source=semicircle seed=x\n1.0,0.0\n",
        "# dim=2 source=semicircle seed=1\n1.0,0.0,3.0\n",
        "# dim=2 source=semicircle seed=1\n1.0,abc\n",
    ],
    ids=["empty", "no-header", "bad-seed", "wrong-arity", "bad-number"],
)
def test_malformed_files(text: str) -> None:
    """Malformed cloud text raises a format error."""
    with pytest.raises(PointCloudFormatError):
        parse_point_cloud(text)


@pytest.mark.unit
def test_empty_body_keeps_declared_dimension() -> None:
    """An empty body still yields a cloud of the declared dimension."""
    cloud = parse_point_cloud("# dim=3 source=torus seed=2\n")
    assert len(cloud) == 0
    assert cloud.dim == 3
