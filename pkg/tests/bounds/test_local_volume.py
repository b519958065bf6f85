"""Tests for the local volume lower bounds."""

from __future__ import annotations

import math

import numpy as np
import pytest

from boundary_tda.bounds import (
    BoundParams,
    beta_fn,
    vol_lower_bound,
    vol_lower_bound_boundary,
    vol_lower_bound_interior,
)
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import DomainError
from boundary_tda.manifolds import Cylinder, estimate_local_volume, get_manifold

CYLINDER = BoundParams(k=2, vol_M=2 * math.pi, delta=1.0)
SEMICIRCLE = BoundParams(k=1, vol_M=math.pi, delta=1.0)

# Monte Carlo draws per centre; the torus ball covers a far smaller share of its parameter domain
LOCAL_VOLUME_DRAWS = {
    ManifoldKind.SEMICIRCLE: 20_000,
    ManifoldKind.CYLINDER: 50_000,
    ManifoldKind.CHOPPED_TORUS: 200_000,
}


@pytest.mark.unit
@pytest.mark.parametrize("kind", list(ManifoldKind))
def test_general_bound_is_volume_over_beta(kind: ManifoldKind) -> None:
    """The everywhere-valid bound equals vol(M) / β(ε) across (0, δ)."""
    params = get_manifold(kind).bound_params
    for eps in np.linspace(0.01, 0.99, 50):
        assert vol_lower_bound(float(eps), params) * beta_fn(float(eps), params) == pytest.approx(
            params.vol_M, rel=1e-12
        )


@pytest.mark.unit
@pytest.mark.parametrize("eps", [0.05, 0.25, 0.49, 0.9])
def test_bounds_are_ordered(eps: float) -> None:
    """General ≤ boundary ≤ interior, and all lie below the flat disk area."""
    general = vol_lower_bound(eps, CYLINDER)
    boundary = vol_lower_bound_boundary(eps, CYLINDER)
    interior = vol_lower_bound_interior(eps, CYLINDER)
    assert 0 < general <= boundary <= interior <= math.pi * eps**2


@pytest.mark.unit
def test_one_dimensional_interior_bound() -> None:
    """For k = 1 the interior bound is 2ε cos θ."""
    eps = 0.4
    expected = 2 * eps * math.sqrt(1 - (eps / 2) ** 2)
    assert vol_lower_bound_interior(eps, SEMICIRCLE) == pytest.approx(expected, rel=1e-12)


@pytest.mark.unit
@pytest.mark.parametrize("eps", [0.0, 1.0, 1.5, -0.2])
def test_bounds_require_eps_below_delta(eps: float) -> None:
    """All three bounds need 0 < ε < δ."""
    for bound in (vol_lower_bound, vol_lower_bound_boundary, vol_lower_bound_interior):
        with pytest.raises(DomainError):
            bound(eps, CYLINDER)


@pytest.mark.integration
def test_boundary_bound_below_monte_carlo_at_the_rim() -> None:
    """At a rim point the bound sits below the measured area of M ∩ B_ε(p)."""
    estimate = estimate_local_volume(Cylinder(), (1.0, 0.0, 0.0), 0.25, 2_000_000, seed=11)
    assert estimate.value - 4 * estimate.stderr > vol_lower_bound_boundary(0.25, CYLINDER)


@pytest.mark.integration
def test_interior_bound_below_monte_carlo_away_from_the_rim() -> None:
    """At height 1/2 the ball misses both rims and the interior bound applies."""
    estimate = estimate_local_volume(Cylinder(), (1.0, 0.0, 0.5), 0.25, 8_000_000, seed=12)
    bound = vol_lower_bound_interior(0.25, CYLINDER)
    assert estimate.value - 4 * estimate.stderr > bound


@pytest.mark.integration
def test_general_bound_below_monte_carlo_at_random_points() -> None:
    """The general bound holds at every sampled centre."""
    spec = Cylinder()
    bound = vol_lower_bound(0.3, CYLINDER)
    centres = spec.sample_uniform(100, seed=13).points
    rng = np.random.default_rng(14)
    for centre in centres:
        estimate = estimate_local_volume(spec, centre, 0.3, 50_000, seed=int(rng.integers(2**31)))
        assert estimate.value - 4 * estimate.stderr > bound


@pytest.mark.slow
@pytest.mark.parametrize("eps", [0.2, 0.3, 0.4])
@pytest.mark.parametrize("kind", list(ManifoldKind))
def test_general_bound_below_monte_carlo_on_every_manifold(kind: ManifoldKind, eps: float) -> None:
    """At 100 seeded centres of each model the measured local volume exceeds the general bound."""
    spec = get_manifold(kind)
    bound = vol_lower_bound(eps, spec.bound_params)
    centres = spec.sample_uniform(100, seed=40).points
    rng = np.random.default_rng(41)
    for centre in centres:
        estimate = estimate_local_volume(spec, centre, eps, LOCAL_VOLUME_DRAWS[kind], seed=int(rng.integers(2**31)))
        assert estimate.value - 4 * estimate.stderr > bound
