"""
Sampling-bound calculator for boundary_tda.

Package structure:
- params.py: BoundParams and BoundQuery value types
- calculator.py: θ(x), β(x), the sample-size bound n* and its sweeps
- local_volume.py: lower bounds on vol(M ∩ B_ε(p))
"""

from .calculator import (
    BoundReport,
    SweepRow,
    beta_fn,
    evaluate_bound,
    sample_size,
    sweep_eps,
    sweep_gamma,
    theta,
)
from .local_volume import vol_lower_bound, vol_lower_bound_boundary, vol_lower_bound_interior
from .params import BoundParams, BoundQuery

__all__ = [
    "BoundParams",
    "BoundQuery",
    "BoundReport",
    "SweepRow",
    "beta_fn",
    "evaluate_bound",
    "sample_size",
    "sweep_eps",
    "sweep_gamma",
    "theta",
    "vol_lower_bound",
    "vol_lower_bound_boundary",
    "vol_lower_bound_interior",
]
