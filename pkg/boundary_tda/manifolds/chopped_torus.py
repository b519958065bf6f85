"""
A torus of revolution with the part x ≥ 2 removed.

The torus has centre-circle radius R = 2 and tube radius a = 1, so its
equator spans the annulus between the circles of radius 1 and 3. The chop
plane x = 2 meets it in a single closed curve, parametrized by the tube
angle v ∈ [-π/2, π/2] as (2, ±sqrt((2 + cos v)² - 4), sin v).
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from scipy import integrate, optimize

from boundary_tda.const import (
    MEDIAL_AXIS_TOLERANCE,
    TORUS_CENTER_RADIUS,
    TORUS_CHOP_X,
    TORUS_TUBE_RADIUS,
    TORUS_VOLUME,
)
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import AmbiguousProjectionError

from .base import ManifoldSpec

if TYPE_CHECKING:
    from boundary_tda.data import FloatArray

R = TORUS_CENTER_RADIUS
A = TORUS_TUBE_RADIUS
CHOP_X = TORUS_CHOP_X

_BOUNDARY_GRID = 181
_MIN_BATCH = 4096


def _boundary_point(v: float, branch: float) -> FloatArray:
    rho = R + A * math.cos(v)
    return np.array([CHOP_X, branch * math.sqrt(max(0.0, rho * rho - CHOP_X * CHOP_X)), A * math.sin(v)])


def _boundary_curve(tau: FloatArray, branch: float) -> FloatArray:
    """Boundary points at v = (π/2) sin(tau); smooth through the endpoints (2, 0, ±1)."""
    v = 0.5 * math.pi * np.sin(tau)
    rho = R + A * np.cos(v)
    y = branch * np.sqrt(np.maximum(0.0, rho * rho - CHOP_X * CHOP_X))
    return np.column_stack((np.full_like(v, CHOP_X), y, A * np.sin(v)))


class ChoppedTorus(ManifoldSpec):
    """
    The torus ((R + a cos v) cos u, (R + a cos v) sin u, a sin v) restricted to x ≤ 2.

    The stored volume is the sample-size bound constant, which anchors n* at
    9809 for ε = 0.49, γ = 0.1; surface_area() returns the true area of the
    chopped surface.
    """

    kind = ManifoldKind.CHOPPED_TORUS
    intrinsic_dim = 2
    ambient_dim = 3
    vol = TORUS_VOLUME
    delta = 1.0
    reach_M = 1.0
    reach_bM = 1.0
    expected_h1_rank = 2

    def surface_area(self) -> float:
        """Return 4π²Ra minus the area of the removed cap, integrated numerically."""

        def removed_strip(v: float) -> float:
            rho = R + A * math.cos(v)
            return A * rho * 2 * math.acos(min(1.0, CHOP_X / rho))

        removed, _ = integrate.quad(removed_strip, -0.5 * math.pi, 0.5 * math.pi, epsabs=1e-12, epsrel=1e-12)
        return 4 * math.pi**2 * R * A - removed

    @staticmethod
    def _embed(u: FloatArray, v: FloatArray) -> FloatArray:
        rho = R + A * np.cos(v)
        return np.column_stack((rho * np.cos(u), rho * np.sin(u), A * np.sin(v)))

    def _sample(self, rng: np.random.Generator, n: int) -> FloatArray:
        # rejection in (u, v): accept with probability (R + a cos v) / (R + a), then drop x >= 2
        collected: list[FloatArray] = []
        remaining = n
        while remaining > 0:
            batch = max(_MIN_BATCH, 2 * remaining)
            u = rng.uniform(0.0, 2 * math.pi, size=batch)
            v = rng.uniform(0.0, 2 * math.pi, size=batch)
            accept = rng.uniform(0.0, 1.0, size=batch) < (R + A * np.cos(v)) / (R + A)
            points = self._embed(u[accept], v[accept])
            points = points[points[:, 0] < CHOP_X][:remaining]
            collected.append(points)
            remaining -= points.shape[0]
        return np.concatenate(collected, axis=0)

    def parametric_sample(self, rng: np.random.Generator, n: int) -> tuple[FloatArray, FloatArray]:
        u = rng.uniform(0.0, 2 * math.pi, size=n)
        v = rng.uniform(0.0, 2 * math.pi, size=n)
        points = self._embed(u, v)
        weights = (2 * math.pi) ** 2 * A * (R + A * np.cos(v))
        weights[points[:, 0] > CHOP_X] = 0.0
        return points, weights

    def _project_to_boundary(self, q: FloatArray) -> FloatArray:
        best: list[tuple[float, FloatArray]] = []
        grid = np.linspace(-0.5 * math.pi, 0.5 * math.pi, _BOUNDARY_GRID)
        step = grid[1] - grid[0]
        for branch in (1.0, -1.0):
            curve = np.array([_boundary_point(v, branch) for v in grid])
            start = float(grid[int(np.argmin(np.linalg.norm(curve - q, axis=1)))])
            bounds = (max(-0.5 * math.pi, start - step), min(0.5 * math.pi, start + step))
            result = optimize.minimize_scalar(
                lambda v, branch=branch: float(np.linalg.norm(_boundary_point(v, branch) - q)),
                bounds=bounds,
                method="bounded",
                options={"xatol": 1e-12},
            )
            point = _boundary_point(float(result.x), branch)
            best.append((float(np.linalg.norm(point - q)), point))
        (d_pos, p_pos), (d_neg, p_neg) = best
        if abs(d_pos - d_neg) < MEDIAL_AXIS_TOLERANCE and np.linalg.norm(p_pos - p_neg) > MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} is equidistant from both halves of the chop curve"
            raise AmbiguousProjectionError(msg)
        return p_pos if d_pos <= d_neg else p_neg

    def _project(self, q: FloatArray) -> FloatArray:
        planar = math.hypot(q[0], q[1])
        if planar < MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} lies on the torus axis"
            raise AmbiguousProjectionError(msg)
        centre = np.array([R * q[0] / planar, R * q[1] / planar, 0.0])
        offset = q - centre
        length = float(np.linalg.norm(offset))
        if length < MEDIAL_AXIS_TOLERANCE:
            msg = f"Point {q.tolist()} lies on the core circle of the torus"
            raise AmbiguousProjectionError(msg)
        foot = centre + A * offset / length
        if foot[0] <= CHOP_X:
            return foot
        return self._project_to_boundary(q)

    def residual(self, points: FloatArray) -> FloatArray:
        planar = np.hypot(points[:, 0], points[:, 1])
        tube = np.hypot(planar - R, points[:, 2])
        return np.abs(tube - A) + np.maximum(0.0, points[:, 0] - CHOP_X)

    @staticmethod
    def _grid_counts(h: float) -> tuple[int, int]:
        # arc-length steps h/√2; the u direction is stretched by at most R + a
        step = h / math.sqrt(2.0)
        return math.ceil(2 * math.pi * (R + A) / step), math.ceil(2 * math.pi * A / step)

    def _boundary_polyline(self, h: float) -> FloatArray:
        spacing = h / 4
        count = 64
        while True:
            tau = np.linspace(-0.5 * math.pi, 0.5 * math.pi, count)
            curves = [_boundary_curve(tau, branch) for branch in (1.0, -1.0)]
            gaps = max(float(np.linalg.norm(np.diff(c, axis=0), axis=1).max()) for c in curves)
            if gaps <= spacing:
                return np.concatenate(curves, axis=0)
            count *= 2

    def _mesh_size(self, h: float) -> int:
        n_u, n_v = self._grid_counts(h)
        return n_u * n_v

    def _mesh(self, h: float) -> FloatArray:
        n_u, n_v = self._grid_counts(h)
        u = np.arange(n_u) * (2 * math.pi / n_u)
        v = np.arange(n_v) * (2 * math.pi / n_v)
        uu, vv = np.meshgrid(u, v, indexing="ij")
        grid = self._embed(uu.ravel(), vv.ravel())
        grid = grid[grid[:, 0] <= CHOP_X]
        return np.concatenate((grid, self._boundary_polyline(h)), axis=0)
