"""Monte Carlo estimates of local volumes vol(M ∩ B_ε(p))."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from boundary_tda.const import DEFAULT_CHUNK_SIZE
from boundary_tda.utils.validators import require_positive, require_positive_int

if TYPE_CHECKING:
    from boundary_tda.data import PointLike

    from .base import ManifoldSpec


class LocalVolumeEstimate(NamedTuple):
    """A Monte Carlo volume estimate with its standard error."""

    value: float
    stderr: float
    samples: int


def estimate_local_volume(
    spec: ManifoldSpec,
    p: PointLike,
    eps: float,
    n: int,
    seed: int,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> LocalVolumeEstimate:
    """
    Estimate the k-volume of the part of M inside the closed ball B_ε(p).

    Points are drawn from the model's parameter domain and weighted by its
    area element, so the estimate does not depend on the stored volume.

    Args:
        spec: The manifold.
        p: Ball centre in ambient space.
        eps: Ball radius.
        n: Number of Monte Carlo samples.
        seed: RNG seed.
        chunk_size: Samples drawn per batch.

    Returns:
        The estimate, its standard error and the sample count.

    """
    eps = require_positive("eps", eps)
    n = require_positive_int("n", n)
    centre = np.asarray(p, dtype=np.float64)
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    drawn = 0
    while drawn < n:
        batch = min(chunk_size, n - drawn)
        points, weights = spec.parametric_sample(rng, batch)
        inside = np.linalg.norm(points - centre, axis=1) <= eps
        values = np.where(inside, weights, 0.0)
        total += float(values.sum())
        total_sq += float(np.square(values).sum())
        drawn += batch
    mean = total / n
    variance = max(0.0, total_sq / n - mean * mean)
    return LocalVolumeEstimate(value=mean, stderr=math.sqrt(variance / n), samples=n)
