"""
Ball and hyperspherical-cap volumes.

Every volume is assembled in log-space and exponentiated once, since the
sampling bound divides quantities whose magnitudes differ by orders of
magnitude at small radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from boundary_tda.exceptions import DomainError
from boundary_tda.utils.validators import require_in_range, require_positive, require_positive_int

from .kernels import ln_gamma, reg_inc_beta

_LN_PI = math.log(math.pi)


@dataclass(frozen=True, slots=True)
class CapSpec:
    """
    A hyperspherical cap of a k-ball.

    The cap is the smaller part of a ball of radius ``r`` cut by a hyperplane
    whose section has radius ``a = r sin(phi)``.

    Attributes:
        k: Dimension of the ball.
        r: Ball radius.
        phi: Cap half-angle in [0, π/2].
    """

    k: int
    r: float
    phi: float

    def __post_init__(self) -> None:
        """Validate the cap parameters."""
        require_positive_int("k", self.k)
        require_positive("r", self.r)
        require_in_range("phi", self.phi, 0.0, math.pi / 2)

    @property
    def base_radius(self) -> float:
        """Radius of the cap's base."""
        return self.r * math.sin(self.phi)


def ln_ball_volume(k: int, r: float) -> float:
    """Return ln V_k(r) where V_k(r) = π^{k/2} r^k / Γ(k/2 + 1)."""
    k = require_positive_int("k", k)
    r = require_positive("r", r)
    return 0.5 * k * _LN_PI + k * math.log(r) - ln_gamma(0.5 * k + 1.0)


def ball_volume(k: int, r: float) -> float:
    """
    Return the volume of the k-dimensional ball of radius r.

    Example:
        >>> round(ball_volume(2, 1.0), 12)
        3.14159265359
    """
    return math.exp(ln_ball_volume(k, r))


def ln_cap_volume(spec: CapSpec) -> float:
    """
    Return the log of the cap volume (1/2) V_k(r) I_{sin²φ}((k+1)/2, 1/2).

    A degenerate cap (phi = 0) has log-volume -inf.
    """
    sin_sq = math.sin(spec.phi) ** 2
    if sin_sq == 0.0:
        return -math.inf
    fraction = reg_inc_beta(min(sin_sq, 1.0), 0.5 * (spec.k + 1), 0.5)
    if fraction <= 0.0:
        msg = f"Cap fraction underflowed for {spec!r}"
        raise DomainError(msg)
    return math.log(0.5) + ln_ball_volume(spec.k, spec.r) + math.log(fraction)


def cap_volume(spec: CapSpec) -> float:
    """
    Return the volume of a hyperspherical cap.

    Args:
        spec: The cap to measure.

    Returns:
        The cap volume; half the ball volume at phi = π/2, zero at phi = 0.

    """
    return math.exp(ln_cap_volume(spec))
