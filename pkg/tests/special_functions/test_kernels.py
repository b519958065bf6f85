"""Tests for the log-gamma and incomplete beta kernels."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate, special

from boundary_tda.exceptions import DomainError
from boundary_tda.special_functions import ln_gamma, reg_inc_beta


def _quadrature_inc_beta(x: float, a: float, b: float) -> float:
    """Integrate t^(a-1) (1-t)^(b-1) over [0, x] with the t^(a-1) factor as an algebraic weight."""
    value, _ = integrate.quad(
        lambda t: (1.0 - t) ** (b - 1.0), 0.0, x, weight="alg", wvar=(a - 1.0, 0.0), epsabs=1e-14, epsrel=1e-12
    )
    return value / special.beta(a, b)


def _stable_quadrature_inc_beta(x: float, a: float, b: float) -> float:
    """Integrate on whichever side of 1/2 keeps the integrand smooth away from the weighted endpoint."""
    if x <= 0.5:
        return _quadrature_inc_beta(x, a, b)
    return 1.0 - _quadrature_inc_beta(1.0 - x, b, a)


@pytest.mark.unit
def test_ln_gamma_matches_factorials() -> None:
    """ln Γ(n) = ln (n-1)!."""
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)


@pytest.mark.unit
@pytest.mark.parametrize("x", [0.0, -1.0, math.inf, math.nan])
def test_ln_gamma_rejects_nonpositive(x: float) -> None:
    """ln Γ is only defined on the positive reals here."""
    with pytest.raises(DomainError):
        ln_gamma(x)


@pytest.mark.unit
@pytest.mark.parametrize(
    ("x", "a", "b"),
    [
        (0.3, 1.5, 0.5),
        (0.95, 1.5, 0.5),
        (0.1, 0.3, 2.0),
        (0.7, 2.5, 3.5),
        (0.999, 1.0, 0.5),
    ],
)
def test_reg_inc_beta_matches_quadrature(x: float, a: float, b: float) -> None:
    """The continued fraction agrees with direct quadrature of the integrand."""
    assert reg_inc_beta(x, a, b) == pytest.approx(_quadrature_inc_beta(x, a, b), abs=1e-10)


@pytest.mark.integration
def test_reg_inc_beta_matches_quadrature_on_random_triples() -> None:
    """A thousand seeded (x, a, b) with a, b in [0.5, 10] agree with quadrature."""
    rng = np.random.default_rng(2024)
    xs = rng.uniform(0.0, 1.0, size=1000)
    shapes = rng.uniform(0.5, 10.0, size=(1000, 2))
    worst = max(
        abs(reg_inc_beta(float(x), float(a), float(b)) - _stable_quadrature_inc_beta(float(x), float(a), float(b)))
        for x, (a, b) in zip(xs, shapes, strict=True)
    )
    assert worst <= 1e-10


@pytest.mark.unit
def test_reg_inc_beta_closed_forms() -> None:
    """I_x(1, 1) = x, I_x(a, 1) = x^a and I_x(1, 1/2) = 1 - sqrt(1 - x)."""
    assert reg_inc_beta(0.25, 1.0, 1.0) == pytest.approx(0.25, abs=1e-14)
    assert reg_inc_beta(0.6, 3.0, 1.0) == pytest.approx(0.6**3, abs=1e-14)
    assert reg_inc_beta(0.84, 1.0, 0.5) == pytest.approx(1.0 - math.sqrt(0.16), abs=1e-14)
    assert reg_inc_beta(0.5, 2.0, 2.0) == pytest.approx(0.5, abs=1e-14)


@pytest.mark.unit
def test_reg_inc_beta_endpoints() -> None:
    """The function is exactly 0 at x = 0 and 1 at x = 1."""
    assert reg_inc_beta(0.0, 1.5, 0.5) == 0.0
    assert reg_inc_beta(1.0, 1.5, 0.5) == 1.0


@pytest.mark.unit
@pytest.mark.parametrize(("x", "a", "b"), [(0.2, 1.5, 0.5), (0.8, 2.0, 0.5), (0.55, 3.0, 7.0)])
def test_reg_inc_beta_reflection(x: float, a: float, b: float) -> None:
    """I_x(a, b) = 1 - I_{1-x}(b, a)."""
    assert reg_inc_beta(x, a, b) == pytest.approx(1.0 - reg_inc_beta(1.0 - x, b, a), abs=1e-13)


@pytest.mark.unit
def test_reg_inc_beta_is_monotone_in_x() -> None:
    """The function is a distribution function in x."""
    values = [reg_inc_beta(i / 200, 1.5, 0.5) for i in range(201)]
    assert all(later >= earlier for earlier, later in zip(values, values[1:], strict=False))
    assert all(0.0 <= value <= 1.0 for value in values)


@pytest.mark.unit
@pytest.mark.parametrize(("x", "a", "b"), [(-0.1, 1.0, 1.0), (1.1, 1.0, 1.0), (0.5, 0.0, 1.0), (0.5, 1.0, -2.0)])
def test_reg_inc_beta_rejects_bad_arguments(x: float, a: float, b: float) -> None:
    """Arguments outside [0, 1] x (0, inf)² are domain errors."""
    with pytest.raises(DomainError):
        reg_inc_beta(x, a, b)
