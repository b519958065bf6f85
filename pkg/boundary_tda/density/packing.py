"""Greedy nets and packing numbers."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from scipy.spatial import cKDTree

from boundary_tda.const import LOGGER
from boundary_tda.exceptions import DomainError
from boundary_tda.utils.validators import require_positive

if TYPE_CHECKING:
    from boundary_tda.manifolds import PointCloud


def greedy_net_indices(cloud: PointCloud, r: float) -> list[int]:
    """
    Return indices of a greedy r-separated subset, scanning in cloud order.

    A point is kept unless it lies within r of a point already kept, so the
    result is pairwise more than r apart and every cloud point is within r of it.
    """
    r = require_positive("r", r)
    if len(cloud) == 0:
        msg = "Cannot build a net of an empty cloud"
        raise DomainError(msg)
    tree = cKDTree(cloud.points)
    covered = np.zeros(len(cloud), dtype=bool)
    kept: list[int] = []
    for index in range(len(cloud)):
        if covered[index]:
            continue
        kept.append(index)
        covered[tree.query_ball_point(cloud.points[index], r)] = True
    LOGGER.debug("Greedy %g-net keeps %d of %d points", r, len(kept), len(cloud))
    return kept


def greedy_net(cloud: PointCloud, r: float) -> PointCloud:
    """Return the greedy r-separated subset as a cloud."""
    return cloud.subset(greedy_net_indices(cloud, r))


def greedy_packing_number(cloud: PointCloud, r: float) -> int:
    """
    Return the size of a maximal greedy r-separated subset.

    This is a lower bound on the r-packing number of the cloud.

    Example:
        >>> from boundary_tda.manifolds import semicircle_example_points
        >>> greedy_packing_number(semicircle_example_points(), 0.1)
        8
    """
    return len(greedy_net_indices(cloud, r))
