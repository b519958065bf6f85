"""The closed unit upper semicircle in the plane."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from boundary_tda.const import MEDIAL_AXIS_TOLERANCE
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import AmbiguousProjectionError

from .base import ManifoldSpec
from .point_cloud import PointCloud

if TYPE_CHECKING:
    from boundary_tda.data import FloatArray

EXAMPLE_ARC_COUNT = 7


class Semicircle(ManifoldSpec):
    """
    The arc {(cos t, sin t) : t ∈ [0, π]}.

    Its boundary is the pair of endpoints (±1, 0); both the arc and its
    boundary have reach 1, which is stored as δ.
    """

    kind = ManifoldKind.SEMICIRCLE
    intrinsic_dim = 1
    ambient_dim = 2
    vol = math.pi
    delta = 1.0
    reach_M = 1.0
    reach_bM = 1.0
    expected_h1_rank = 0

    def _sample(self, rng: np.random.Generator, n: int) -> FloatArray:
        angles = rng.uniform(0.0, math.pi, size=n)
        return np.column_stack((np.cos(angles), np.sin(angles)))

    def parametric_sample(self, rng: np.random.Generator, n: int) -> tuple[FloatArray, FloatArray]:
        points = self._sample(rng, n)
        return points, np.full(n, math.pi)

    def _project(self, q: FloatArray) -> FloatArray:
        x, y = float(q[0]), float(q[1])
        if math.hypot(x, y) < MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} is equidistant from the whole semicircle"
            raise AmbiguousProjectionError(msg)
        if y >= 0.0:
            angle = math.atan2(y, x)
            return np.array([math.cos(angle), math.sin(angle)])
        # below the diameter the nearest point is an endpoint
        if abs(x) < MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} is equidistant from both endpoints"
            raise AmbiguousProjectionError(msg)
        return np.array([1.0, 0.0]) if x > 0 else np.array([-1.0, 0.0])

    def residual(self, points: FloatArray) -> FloatArray:
        radius = np.hypot(points[:, 0], points[:, 1])
        return np.abs(radius - 1.0) + np.maximum(0.0, -points[:, 1])

    def _mesh_size(self, h: float) -> int:
        return math.ceil(math.pi / h - 1e-9) + 1

    def _mesh(self, h: float) -> FloatArray:
        angles = np.linspace(0.0, math.pi, self._mesh_size(h))
        return np.column_stack((np.cos(angles), np.sin(angles)))


def semicircle_example_points() -> PointCloud:
    """
    Return the eight points dividing the semicircle into seven equal arcs.

    The first and last points are (1, 0) and (-1, 0), the endpoints of the diameter.

    Example:
        >>> len(semicircle_example_points())
        8
    """
    angles = np.arange(EXAMPLE_ARC_COUNT + 1) * math.pi / EXAMPLE_ARC_COUNT
    points = np.column_stack((np.cos(angles), np.sin(angles)))
    # exact endpoints
    points[0] = (1.0, 0.0)
    points[-1] = (-1.0, 0.0)
    return PointCloud(points, seed=None, source=str(ManifoldKind.SEMICIRCLE))
