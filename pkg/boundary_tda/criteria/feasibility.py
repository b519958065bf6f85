"""
Applicability tests of three reconstruction criteria.

- ours: ε < δ/2 and the sample is ε/2-dense (d_H < ε/2).
- Chazal et al.: some μ admits α with 4 d_H/μ² ≤ α < r_μ - 3 d_H.
- Attali et al. (Čech): some μ ∈ (0, 1] has d_H < λ^cech(μ) r_μ.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING, NamedTuple

from boundary_tda.exceptions import DomainError
from boundary_tda.utils.validators import require_positive

if TYPE_CHECKING:
    from boundary_tda.manifolds import ManifoldSpec

    from .profiles import MuReachProfile


class FeasibilityResult(NamedTuple):
    """A verdict with the number that decided it."""

    applicable: bool
    margin: float


def chazal_feasible(d_H: float, profile: MuReachProfile) -> FeasibilityResult:  # noqa: N803
    """
    Test whether some μ > 0 satisfies 4 d_H/μ² < r_μ - 3 d_H.

    On each piece (lo, hi] the margin r - 3 d_H - 4 d_H/μ² increases with μ,
    so its supremum is taken at hi (r - 3 d_H when hi is infinite).

    Args:
        d_H: Hausdorff distance between sample and target, > 0.
        profile: μ-reach profile of the target.

    Returns:
        Feasibility and the best margin; feasible iff the margin is positive.

    """
    d_H = require_positive("d_H", d_H)  # noqa: N806
    best = -math.inf
    for piece in profile.pieces:
        penalty = 0.0 if math.isinf(piece.hi) else 4 * d_H / piece.hi**2
        best = max(best, piece.value - 3 * d_H - penalty)
    return FeasibilityResult(best > 0, best)


def lambda_cech(mu: float) -> float:
    """
    Return the Čech sampling constant λ^cech(μ) for μ ∈ (0, 1].

    Example:
        >>> round(lambda_cech(1.0), 6)
        0.130032
    """
    mu = require_positive("mu", mu)
    if mu > 1.0:
        msg = f"lambda_cech requires 0 < mu <= 1, got {mu!r}"
        raise DomainError(msg)
    radicand = -8 * mu**2 + 4 * mu**3 + 18 * mu + 2 * mu**4 + 9 + mu**6 - 4 * mu**5
    numerator = -3 * mu + 3 * mu**2 - 3 + math.sqrt(radicand)
    denominator = -7 * mu**2 + 22 * mu + mu**4 - 4 * mu**3 + 1
    return numerator / denominator


def attali_cech_feasible(d_H: float, profile: MuReachProfile) -> FeasibilityResult:  # noqa: N803
    """
    Test whether d_H < λ^cech(μ) r_μ for some μ ∈ (0, 1].

    λ^cech increases on (0, 1] and r_μ is constant per piece, so each piece
    contributes its value at min(hi, 1).

    Returns:
        Feasibility and the supremum threshold sup λ^cech(μ) r_μ.

    """
    d_H = require_positive("d_H", d_H)  # noqa: N806
    threshold = 0.0
    for piece in profile.pieces:
        if piece.lo >= 1.0:
            break
        threshold = max(threshold, lambda_cech(min(piece.hi, 1.0)) * piece.value)
    return FeasibilityResult(d_H < threshold, threshold)


def ours_feasible(spec: ManifoldSpec, d_H: float, eps: float) -> bool:  # noqa: N803
    """Return whether eps < δ/2 and the sample is eps/2-dense (d_H < eps/2)."""
    eps = require_positive("eps", eps)
    return eps < spec.delta / 2 and d_H < eps / 2
