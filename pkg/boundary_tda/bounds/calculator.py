"""
Sampling-bound calculator.

With θ(x) = arcsin(x / 4δ), the bound function is

    β(x) = vol(M) / [ cos^k θ / 2^{k+1} · I_{1 - x² cos²θ / 16δ²}((k+1)/2, 1/2) · V_k(x) ]

and n i.i.d. uniform samples are enough for the union of ε-balls to deformation
retract onto M with probability 1 - γ whenever n > β(ε) (ln β(ε/2) + ln 1/γ).
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import sys
from typing import TYPE_CHECKING, NamedTuple

from boundary_tda.const import EPS_GRID, GAMMA_GRID, LOGGER
from boundary_tda.exceptions import BoundOverflowError, DomainError
from boundary_tda.special_functions import ln_ball_volume, reg_inc_beta
from boundary_tda.utils.validators import require_positive

from .params import BoundParams, BoundQuery

if TYPE_CHECKING:
    from collections.abc import Iterable

_LN_DOUBLE_MAX = math.log(sys.float_info.max)


def theta(x: float, delta: float) -> float:
    """
    Return θ = arcsin(x / 4δ).

    Args:
        x: Radius, 0 < x ≤ 4δ.
        delta: Condition number δ.

    Raises:
        DomainError: If x > 4δ (the arcsin argument exceeds 1).

    Example:
        >>> theta(4.0, 1.0) == math.pi / 2
        True
    """
    x = require_positive("x", x)
    delta = require_positive("delta", delta)
    if x > 4 * delta:
        msg = f"theta requires x <= 4*delta, got x={x!r}, delta={delta!r}"
        raise DomainError(msg)
    return math.asin(x / (4 * delta))


def ln_local_volume_factor(x: float, k: int, sin_theta: float, scale: float) -> float:
    """
    Return ln[cos^k θ · I_{1 - x² cos²θ / scale}((k+1)/2, 1/2)].

    Shared by β(x) and the local volume lower bounds, which differ only in
    θ and in the scale of the incomplete-beta argument.
    """
    cos_sq = 1.0 - sin_theta * sin_theta
    argument = 1.0 - x * x * cos_sq / scale
    fraction = reg_inc_beta(argument, 0.5 * (k + 1), 0.5)
    if fraction <= 0.0 or cos_sq <= 0.0:
        msg = f"Local volume factor vanished at x={x!r}"
        raise DomainError(msg)
    return 0.5 * k * math.log(cos_sq) + math.log(fraction)


def ln_beta_fn(x: float, p: BoundParams) -> float:
    """Return ln β(x)."""
    x = require_positive("x", x)
    if not x < 2 * p.delta:
        msg = f"beta_fn requires 0 < x < 2*delta, got x={x!r}, delta={p.delta!r}"
        raise DomainError(msg)
    th = theta(x, p.delta)
    ln_denominator = (
        ln_local_volume_factor(x, p.k, math.sin(th), 16 * p.delta**2)
        - (p.k + 1) * math.log(2.0)
        + ln_ball_volume(p.k, x)
    )
    return math.log(p.vol_M) - ln_denominator


def beta_fn(x: float, p: BoundParams) -> float:
    """
    Return β(x) for the given manifold parameters.

    Args:
        x: Radius with 0 < x < 2δ.
        p: Manifold parameters.

    Returns:
        β(x) > 0; diverges like x^{-k} as x → 0.

    Raises:
        DomainError: If x is outside (0, 2δ).
        BoundOverflowError: If β(x) exceeds the double-precision range.

    """
    ln_value = ln_beta_fn(x, p)
    if ln_value >= _LN_DOUBLE_MAX:
        msg = f"beta_fn({x!r}) overflows double precision (ln value {ln_value:.6g})"
        raise BoundOverflowError(msg)
    return math.exp(ln_value)


def _round_strict(value: float) -> int:
    """Return the smallest integer strictly greater than value."""
    if not math.isfinite(value):
        msg = f"Sample size is not finite: {value!r}"
        raise BoundOverflowError(msg)
    ceiling = math.ceil(value)
    return ceiling + 1 if ceiling == value else ceiling


@dataclass(frozen=True, slots=True)
class BoundReport:
    """
    Everything that goes into one evaluation of n*.

    Attributes:
        params: Manifold parameters.
        query: Offset radius and failure probability.
        n_star: The sample size.
        value: Unrounded β(ε)(ln β(ε/2) + ln 1/γ).
        beta_eps: β(ε).
        beta_half: β(ε/2).
        theta_eps: θ(ε).
        theta_half: θ(ε/2).
    """

    params: BoundParams
    query: BoundQuery
    n_star: int
    value: float
    beta_eps: float
    beta_half: float
    theta_eps: float
    theta_half: float


def evaluate_bound(q: BoundQuery, p: BoundParams) -> BoundReport:
    """
    Evaluate the sample-size bound with its intermediate quantities.

    Raises:
        DomainError: If eps is not below delta / 2.
        BoundOverflowError: If β overflows.

    """
    q.check_against(p)
    beta_eps = beta_fn(q.eps, p)
    beta_half = beta_fn(q.eps / 2, p)
    value = beta_eps * (math.log(beta_half) + math.log(1.0 / q.gamma))
    n_star = _round_strict(value)
    LOGGER.debug(
        "n* for k=%d vol=%.6g delta=%.6g eps=%.6g gamma=%.6g: %.6f -> %d",
        p.k,
        p.vol_M,
        p.delta,
        q.eps,
        q.gamma,
        value,
        n_star,
    )
    return BoundReport(
        params=p,
        query=q,
        n_star=n_star,
        value=value,
        beta_eps=beta_eps,
        beta_half=beta_half,
        theta_eps=theta(q.eps, p.delta),
        theta_half=theta(q.eps / 2, p.delta),
    )


def sample_size(q: BoundQuery, p: BoundParams) -> int:
    """
    Return n* = the smallest integer strictly above β(ε)(ln β(ε/2) + ln 1/γ).

    Example:
        >>> sample_size(BoundQuery(eps=0.49, gamma=0.1), BoundParams(k=2, vol_M=2 * math.pi, delta=1.0))
        638
    """
    return evaluate_bound(q, p).n_star


class SweepRow(NamedTuple):
    """One row of a bound sweep."""

    x: float
    n_star: int


def sweep_gamma(eps: float, p: BoundParams, grid: Iterable[float] = GAMMA_GRID) -> list[SweepRow]:
    """Evaluate n* at fixed eps across a grid of failure probabilities."""
    return [SweepRow(gamma, sample_size(BoundQuery(eps=eps, gamma=gamma), p)) for gamma in grid]


def sweep_eps(gamma: float, p: BoundParams, grid: Iterable[float] = EPS_GRID) -> list[SweepRow]:
    """Evaluate n* at fixed gamma across a grid of radii, dropping radii with ε ≥ δ/2."""
    rows = [
        SweepRow(eps, sample_size(BoundQuery(eps=eps, gamma=gamma), p))
        for eps in grid
        if eps < p.delta / 2
    ]
    LOGGER.debug("eps sweep kept %d grid points below delta/2=%.6g", len(rows), p.delta / 2)
    return rows
