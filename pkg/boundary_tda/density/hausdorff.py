"""One-sided Hausdorff distances between meshes, clouds and manifolds."""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from boundary_tda.const import DEFAULT_CHUNK_SIZE, LOGGER
from boundary_tda.exceptions import DimensionMismatchError, DomainError

if TYPE_CHECKING:
    from boundary_tda.data import FloatArray
    from boundary_tda.manifolds import ManifoldSpec, PointCloud


class SupDistance(NamedTuple):
    """The largest nearest-neighbour distance and the mesh point attaining it."""

    distance: float
    witness: FloatArray


def _check_pair(mesh: PointCloud, cloud: PointCloud) -> None:
    if len(mesh) == 0 or len(cloud) == 0:
        msg = "Both the mesh and the cloud must be nonempty"
        raise DomainError(msg)
    if mesh.dim != cloud.dim:
        msg = f"Mesh lives in R^{mesh.dim} but the cloud lives in R^{cloud.dim}"
        raise DimensionMismatchError(msg)


def sup_distance_to_cloud(
    mesh: PointCloud,
    cloud: PointCloud,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> SupDistance:
    """
    Return max over mesh points m of the distance from m to the nearest cloud point.

    Args:
        mesh: The points to cover.
        cloud: The covering points.
        chunk_size: Mesh points queried per batch.

    Returns:
        The distance and the first mesh point achieving it.

    Raises:
        DomainError: If either set is empty.
        DimensionMismatchError: If the ambient dimensions differ.

    """
    _check_pair(mesh, cloud)
    tree = cKDTree(cloud.points)
    best = -1.0
    best_index = 0
    for start in range(0, len(mesh), chunk_size):
        distances, _ = tree.query(mesh.points[start : start + chunk_size], k=1)
        local = int(np.argmax(distances))
        if distances[local] > best:
            best = float(distances[local])
            best_index = start + local
    LOGGER.debug("Sup distance over %d mesh points to %d cloud points: %.6g", len(mesh), len(cloud), best)
    return SupDistance(best, mesh.points[best_index].copy())


def cloud_to_manifold_distance(spec: ManifoldSpec, cloud: PointCloud) -> float:
    """Return max over cloud points x of the distance from x to the manifold."""
    if len(cloud) == 0:
        return 0.0
    return max(float(np.linalg.norm(point - spec.project(point))) for point in cloud.points)


def hausdorff_upper_bound(spec: ManifoldSpec, cloud: PointCloud, h: float) -> float:
    """
    Return an upper bound on d_H(cloud, M) using a mesh of covering radius h.

    The manifold-to-cloud side is bounded by the mesh sup distance plus h.
    """
    mesh = spec.reference_mesh(h)
    covering = sup_distance_to_cloud(mesh, cloud).distance + h
    return max(covering, cloud_to_manifold_distance(spec, cloud))
