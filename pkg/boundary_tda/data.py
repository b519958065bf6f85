"""Shared types for the boundary_tda package."""

from __future__ import annotations

from enum import StrEnum

import numpy as np
import numpy.typing as npt

type FloatArray = npt.NDArray[np.float64]
type PointLike = npt.ArrayLike


class ManifoldKind(StrEnum):
    """Built-in compact manifolds with boundary."""

    SEMICIRCLE = "semicircle"
    CYLINDER = "cylinder"
    CHOPPED_TORUS = "torus"
