"""
Base class for concrete compact manifolds with boundary.

A model fixes its intrinsic and ambient dimensions, its volume, and its
condition number δ together with the reach constants that admit it, and
provides uniform sampling, nearest-point projection and covering meshes.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, ClassVar

import numpy as np

from boundary_tda.bounds import BoundParams
from boundary_tda.const import DEFAULT_MESH_CAP, LOGGER, ON_MANIFOLD_TOLERANCE
from boundary_tda.exceptions import (
    DimensionMismatchError,
    DomainError,
    ManifoldDefinitionError,
    OffManifoldError,
    ResourceLimitError,
)
from boundary_tda.utils.validators import require_positive, require_positive_int

from .point_cloud import PointCloud

if TYPE_CHECKING:
    from boundary_tda.data import FloatArray, ManifoldKind, PointLike


class ManifoldSpec(ABC):
    """
    A compact manifold with boundary embedded in Euclidean space.

    Subclasses set the class-level constants and implement the geometry hooks.

    Attributes:
        kind: Registry identifier.
        intrinsic_dim: Dimension k of the manifold.
        ambient_dim: Dimension N of the ambient space.
        vol: Stored k-volume used by the sampling bound.
        delta: Condition number δ.
        reach_M: Reach of the manifold.
        reach_bM: Reach of its boundary.
        expected_h1_rank: Rank of the first homology group.
    """

    kind: ClassVar[ManifoldKind]
    intrinsic_dim: ClassVar[int]
    ambient_dim: ClassVar[int]
    vol: ClassVar[float]
    delta: ClassVar[float]
    reach_M: ClassVar[float]  # noqa: N815
    reach_bM: ClassVar[float]  # noqa: N815
    expected_h1_rank: ClassVar[int]

    def __init__(self, mesh_cap: int = DEFAULT_MESH_CAP) -> None:
        """
        Check the stored constants.

        Args:
            mesh_cap: Maximum number of points a reference mesh may have.

        Raises:
            ManifoldDefinitionError: If δ exceeds either reach constant.

        """
        if self.delta > min(self.reach_M, self.reach_bM):
            msg = (
                f"{self.kind}: delta={self.delta!r} exceeds min(reach_M, reach_bM)="
                f"{min(self.reach_M, self.reach_bM)!r}"
            )
            raise ManifoldDefinitionError(msg)
        self.mesh_cap = mesh_cap

    def __repr__(self) -> str:
        """Return the model name."""
        return f"{type(self).__name__}()"

    @property
    def bound_params(self) -> BoundParams:
        """Parameters for the sampling bound."""
        return BoundParams(k=self.intrinsic_dim, vol_M=self.vol, delta=self.delta)

    def surface_area(self) -> float:
        """Return the true k-volume of the model."""
        return self.vol

    # Geometry hooks

    @abstractmethod
    def _sample(self, rng: np.random.Generator, n: int) -> FloatArray:
        """Draw n uniform points."""

    @abstractmethod
    def _project(self, q: FloatArray) -> FloatArray:
        """Project one point, raising AmbiguousProjectionError on the medial axis."""

    @abstractmethod
    def residual(self, points: FloatArray) -> FloatArray:
        """Return a nonnegative per-point violation of the defining equations."""

    @abstractmethod
    def _mesh_size(self, h: float) -> int:
        """Return the number of points _mesh would allocate."""

    @abstractmethod
    def _mesh(self, h: float) -> FloatArray:
        """Build the covering mesh."""

    @abstractmethod
    def parametric_sample(self, rng: np.random.Generator, n: int) -> tuple[FloatArray, FloatArray]:
        """
        Draw n points from a parameter domain with integration weights.

        The mean of weight times an indicator is an unbiased estimate of the
        k-volume of the region the indicator selects.
        """

    # Public operations

    def sample_uniform(self, n: int, seed: int) -> PointCloud:
        """
        Draw n i.i.d. points uniform with respect to k-volume.

        Args:
            n: Number of points.
            seed: RNG seed; equal seeds give equal clouds.

        Returns:
            The sampled cloud.

        """
        n = require_positive_int("n", n)
        rng = np.random.default_rng(seed)
        points = self._sample(rng, n)
        LOGGER.debug("Sampled %d points on %s (seed=%s)", n, self.kind, seed)
        return PointCloud(points, seed=seed, source=str(self.kind))

    def project(self, q: PointLike) -> FloatArray:
        """
        Return the nearest point of the manifold to q.

        Raises:
            DimensionMismatchError: If q is not in the ambient space.
            AmbiguousProjectionError: If q is within tolerance of the medial axis.

        """
        point = np.asarray(q, dtype=np.float64)
        if point.shape != (self.ambient_dim,):
            msg = f"{self.kind} lives in R^{self.ambient_dim}, got a point of shape {point.shape}"
            raise DimensionMismatchError(msg)
        return self._project(point)

    def contains(self, points: PointLike, tolerance: float = ON_MANIFOLD_TOLERANCE) -> np.ndarray:
        """Return a boolean mask of points lying on the manifold to within tolerance."""
        array = np.atleast_2d(np.asarray(points, dtype=np.float64))
        if array.shape[1] != self.ambient_dim:
            msg = f"{self.kind} lives in R^{self.ambient_dim}, got points of dimension {array.shape[1]}"
            raise DimensionMismatchError(msg)
        return self.residual(array) <= tolerance

    def validate_cloud(self, cloud: PointCloud) -> None:
        """
        Check that every point of a cloud lies on the manifold.

        Raises:
            DimensionMismatchError: If the cloud's dimension is wrong.
            OffManifoldError: If some point is off the manifold.

        """
        if len(cloud) == 0:
            return
        mask = self.contains(cloud.points)
        if not mask.all():
            index = int(np.flatnonzero(~mask)[0])
            msg = (
                f"{int((~mask).sum())} of {len(cloud)} points are not on {self.kind}; "
                f"first offender at index {index}: {cloud.points[index].tolist()}"
            )
            raise OffManifoldError(msg)

    def reference_mesh(self, h: float) -> PointCloud:
        """
        Build a deterministic mesh whose covering radius on the manifold is at most h.

        Args:
            h: Covering radius with 0 < h < delta.

        Returns:
            The mesh as a seedless cloud, boundary included.

        Raises:
            DomainError: If h is outside (0, delta).
            ResourceLimitError: If the mesh would exceed the configured cap.

        """
        h = require_positive("h", h)
        if not h < self.delta:
            msg = f"Mesh resolution must satisfy 0 < h < delta={self.delta!r}, got {h!r}"
            raise DomainError(msg)
        size = self._mesh_size(h)
        if size > self.mesh_cap:
            msg = f"Reference mesh of {self.kind} at h={h!r} needs {size} points, cap is {self.mesh_cap}"
            raise ResourceLimitError(msg)
        points = self._mesh(h)
        LOGGER.debug("Reference mesh of %s at h=%g: %d points", self.kind, h, points.shape[0])
        return PointCloud(points, seed=None, source=str(self.kind))
