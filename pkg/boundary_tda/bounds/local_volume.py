"""
Lower bounds on the volume of M ∩ B_ε(p).

Three bounds are provided: one for p on the boundary, one for p whose ε-ball
misses the boundary, and a general one valid everywhere on M. The general
bound equals vol(M) / β(ε).
"""

from __future__ import annotations

import math

from boundary_tda.exceptions import DomainError
from boundary_tda.special_functions import ln_ball_volume
from boundary_tda.utils.validators import require_positive

from .calculator import ln_local_volume_factor
from .params import BoundParams


def _check_radius(eps: float, p: BoundParams) -> float:
    eps = require_positive("eps", eps)
    if not eps < p.delta:
        msg = f"Local volume bounds require 0 < eps < delta, got eps={eps!r}, delta={p.delta!r}"
        raise DomainError(msg)
    return eps


def vol_lower_bound_boundary(eps: float, p: BoundParams) -> float:
    """
    Return the local volume lower bound at a boundary point.

    Uses θ = arcsin(ε / 2δ) and returns
    (cos^k θ / 2) · I_{1 - ε² cos²θ / 4δ²}((k+1)/2, 1/2) · V_k(ε).

    Raises:
        DomainError: If eps is not in (0, delta).

    """
    eps = _check_radius(eps, p)
    sin_theta = eps / (2 * p.delta)
    return math.exp(
        ln_local_volume_factor(eps, p.k, sin_theta, 4 * p.delta**2)
        - math.log(2.0)
        + ln_ball_volume(p.k, eps)
    )


def vol_lower_bound_interior(eps: float, p: BoundParams) -> float:
    """Return cos^k θ · V_k(ε) with θ = arcsin(ε / 2δ), valid when B_ε(p) misses ∂M."""
    eps = _check_radius(eps, p)
    cos_sq = 1.0 - (eps / (2 * p.delta)) ** 2
    return math.exp(0.5 * p.k * math.log(cos_sq) + ln_ball_volume(p.k, eps))


def vol_lower_bound(eps: float, p: BoundParams) -> float:
    """
    Return the local volume lower bound valid at every point of M.

    Uses θ' = arcsin(ε / 4δ) and returns
    (cos^k θ' / 2^{k+1}) · I_{1 - ε² cos²θ' / 16δ²}((k+1)/2, 1/2) · V_k(ε),
    which is vol(M) / β(ε).

    Args:
        eps: Radius with 0 < eps < delta.
        p: Manifold parameters.

    Raises:
        DomainError: If eps is not in (0, delta).

    """
    eps = _check_radius(eps, p)
    sin_theta = eps / (4 * p.delta)
    return math.exp(
        ln_local_volume_factor(eps, p.k, sin_theta, 16 * p.delta**2)
        - (p.k + 1) * math.log(2.0)
        + ln_ball_volume(p.k, eps)
    )
