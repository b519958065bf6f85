"""Shared fixtures for the boundary_tda test suite."""

from __future__ import annotations

import pytest

from boundary_tda.manifolds import ChoppedTorus, Cylinder, PointCloud, Semicircle, semicircle_example_points


@pytest.fixture
def semicircle() -> Semicircle:
    """Return the unit upper semicircle."""
    return Semicircle()


@pytest.fixture
def cylinder() -> Cylinder:
    """Return the unit cylinder of height 1."""
    return Cylinder()


@pytest.fixture
def torus() -> ChoppedTorus:
    """Return the chopped torus."""
    return ChoppedTorus()


@pytest.fixture
def example_points() -> PointCloud:
    """Return the eight evenly spaced semicircle points."""
    return semicircle_example_points()
