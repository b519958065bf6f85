"""
Scalar special-function kernels for boundary_tda.

Package structure:
- kernels.py: log-gamma and the regularized incomplete beta function
- volumes.py: k-ball and hyperspherical-cap volumes
"""

from .kernels import ln_gamma, reg_inc_beta
from .volumes import CapSpec, ball_volume, cap_volume, ln_ball_volume, ln_cap_volume

__all__ = [
    "CapSpec",
    "ball_volume",
    "cap_volume",
    "ln_ball_volume",
    "ln_cap_volume",
    "ln_gamma",
    "reg_inc_beta",
]
