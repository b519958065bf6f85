"""The lateral surface of the unit cylinder of height 1."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from boundary_tda.const import MEDIAL_AXIS_TOLERANCE
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import AmbiguousProjectionError

from .base import ManifoldSpec

if TYPE_CHECKING:
    from boundary_tda.data import FloatArray


class Cylinder(ManifoldSpec):
    """
    The surface {x² + y² = 1, 0 ≤ z ≤ 1} in R³.

    The boundary is the pair of rim circles at z = 0 and z = 1, whose
    geometric reach is rim_pair_reach = 1/2. reach_bM stores the admitted
    bound that makes δ = 1 valid, not that geometric value.
    """

    kind = ManifoldKind.CYLINDER
    intrinsic_dim = 2
    ambient_dim = 3
    vol = 2 * math.pi
    delta = 1.0
    reach_M = 1.0
    reach_bM = 1.0  # admitted δ bound, not the rim reach
    rim_pair_reach = 0.5
    expected_h1_rank = 1

    def _sample(self, rng: np.random.Generator, n: int) -> FloatArray:
        points, _ = self.parametric_sample(rng, n)
        return points

    def parametric_sample(self, rng: np.random.Generator, n: int) -> tuple[FloatArray, FloatArray]:
        angles = rng.uniform(0.0, 2 * math.pi, size=n)
        heights = rng.uniform(0.0, 1.0, size=n)
        points = np.column_stack((np.cos(angles), np.sin(angles), heights))
        return points, np.full(n, 2 * math.pi)

    def _project(self, q: FloatArray) -> FloatArray:
        radius = math.hypot(q[0], q[1])
        if radius < MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} lies on the cylinder axis"
            raise AmbiguousProjectionError(msg)
        return np.array([q[0] / radius, q[1] / radius, min(1.0, max(0.0, float(q[2])))])

    def residual(self, points: FloatArray) -> FloatArray:
        radius = np.hypot(points[:, 0], points[:, 1])
        z = points[:, 2]
        return np.abs(radius - 1.0) + np.maximum(0.0, -z) + np.maximum(0.0, z - 1.0)

    @staticmethod
    def _grid_counts(h: float) -> tuple[int, int]:
        step = h / math.sqrt(2.0)
        return math.ceil(2 * math.pi / step), math.ceil(1.0 / step) + 1

    def _mesh_size(self, h: float) -> int:
        n_angle, n_height = self._grid_counts(h)
        return n_angle * n_height

    def _mesh(self, h: float) -> FloatArray:
        n_angle, n_height = self._grid_counts(h)
        angles = np.arange(n_angle) * (2 * math.pi / n_angle)
        heights = np.linspace(0.0, 1.0, n_height)
        aa, zz = np.meshgrid(angles, heights, indexing="ij")
        return np.column_stack((np.cos(aa).ravel(), np.sin(aa).ravel(), zz.ravel()))
