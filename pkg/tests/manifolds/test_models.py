"""Tests for the built-in manifold models."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate, stats
from scipy.spatial import cKDTree

from boundary_tda.const import TORUS_CENTER_RADIUS, TORUS_CHOP_X, TORUS_TUBE_RADIUS
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import (
    AmbiguousProjectionError,
    DimensionMismatchError,
    DomainError,
    ManifoldDefinitionError,
    OffManifoldError,
    ResourceLimitError,
)
from boundary_tda.manifolds import (
    MANIFOLDS,
    ChoppedTorus,
    Cylinder,
    PointCloud,
    Semicircle,
    estimate_local_volume,
    get_manifold,
)

TRUE_TORUS_AREA = 67.509627
CHI_SQUARED_CELLS = 50


@pytest.mark.unit
def test_registry_lookup() -> None:
    """Every kind resolves to its model; unknown names are domain errors."""
    assert isinstance(get_manifold("semicircle"), Semicircle)
    assert isinstance(get_manifold(ManifoldKind.CYLINDER), Cylinder)
    assert isinstance(get_manifold("torus"), ChoppedTorus)
    assert set(MANIFOLDS) == set(ManifoldKind)
    with pytest.raises(DomainError, match="Unknown manifold"):
        get_manifold("sphere")


@pytest.mark.unit
def test_stored_constants() -> None:
    """Dimensions, volumes and expected ranks of the built-ins."""
    semicircle, cylinder, torus = Semicircle(), Cylinder(), ChoppedTorus()
    assert (semicircle.intrinsic_dim, semicircle.ambient_dim, semicircle.vol) == (1, 2, math.pi)
    assert (cylinder.intrinsic_dim, cylinder.ambient_dim, cylinder.vol) == (2, 3, 2 * math.pi)
    assert torus.vol == pytest.approx((8 - 0.522) * math.pi**2)
    assert [m.expected_h1_rank for m in (semicircle, cylinder, torus)] == [0, 1, 2]
    assert all(m.delta == 1.0 for m in (semicircle, cylinder, torus))
    assert cylinder.bound_params.vol_M == 2 * math.pi


@pytest.mark.unit
def test_delta_above_reach_is_rejected() -> None:
    """A model whose δ exceeds its reach does not construct."""

    class TooWide(Semicircle):
        delta = 2.0

    with pytest.raises(ManifoldDefinitionError):
        TooWide()


@pytest.mark.unit
def test_cylinder_rim_reach_is_below_the_admitted_bound(cylinder: Cylinder) -> None:
    """The waist circle is the rims' medial axis at distance 1/2; reach_bM keeps the admitted value."""
    angles = np.linspace(0.0, 2 * math.pi, 3600, endpoint=False)
    waist = np.array([1.0, 0.0, 0.5])
    for height in (0.0, 1.0):
        rim = np.column_stack((np.cos(angles), np.sin(angles), np.full_like(angles, height)))
        assert float(np.linalg.norm(rim - waist, axis=1).min()) == pytest.approx(cylinder.rim_pair_reach)
    assert cylinder.rim_pair_reach == 0.5
    assert cylinder.reach_bM == cylinder.delta == 1.0
    assert cylinder.rim_pair_reach < cylinder.reach_bM


@pytest.mark.unit
def test_torus_surface_area(torus: ChoppedTorus) -> None:
    """The true area is 8π² minus the removed cap, distinct from the stored volume."""
    assert torus.surface_area() == pytest.approx(TRUE_TORUS_AREA, abs=1e-5)
    assert torus.surface_area() < torus.vol


@pytest.mark.unit
@pytest.mark.parametrize(
    ("query", "expected"),
    [
        ((2.0, 0.0), (1.0, 0.0)),
        ((0.0, 0.5), (0.0, 1.0)),
        ((-3.0, 3.0), (-math.sqrt(0.5), math.sqrt(0.5))),
        ((0.5, -1.0), (1.0, 0.0)),
        ((-0.2, -4.0), (-1.0, 0.0)),
    ],
)
def test_semicircle_projection(semicircle: Semicircle, query: tuple[float, float], expected: tuple[float, float]) -> None:
    """Above the diameter project radially, below it to the nearer endpoint."""
    np.testing.assert_allclose(semicircle.project(query), expected, atol=1e-12)


@pytest.mark.unit
@pytest.mark.parametrize("query", [(0.0, 0.0), (0.0, -1.0)])
def test_semicircle_medial_axis(semicircle: Semicircle, query: tuple[float, float]) -> None:
    """The centre and the negative y-axis have no unique nearest point."""
    with pytest.raises(AmbiguousProjectionError):
        semicircle.project(query)


@pytest.mark.unit
def test_projection_dimension_check(semicircle: Semicircle, cylinder: Cylinder) -> None:
    """Queries must live in the ambient space."""
    with pytest.raises(DimensionMismatchError):
        semicircle.project((1.0, 0.0, 0.0))
    with pytest.raises(DimensionMismatchError):
        cylinder.contains(np.zeros((4, 2)))


@pytest.mark.unit
@pytest.mark.parametrize(
    ("query", "expected"),
    [
        ((2.0, 0.0, 0.5), (1.0, 0.0, 0.5)),
        ((0.0, 0.5, 2.0), (0.0, 1.0, 1.0)),
        ((-3.0, 0.0, -1.0), (-1.0, 0.0, 0.0)),
    ],
)
def test_cylinder_projection(
    cylinder: Cylinder, query: tuple[float, float, float], expected: tuple[float, float, float]
) -> None:
    """Radial projection with the height clamped to [0, 1]."""
    np.testing.assert_allclose(cylinder.project(query), expected, atol=1e-12)


@pytest.mark.unit
def test_cylinder_axis_is_ambiguous(cylinder: Cylinder) -> None:
    """Points on the axis are equidistant from a whole circle."""
    with pytest.raises(AmbiguousProjectionError):
        cylinder.project((0.0, 0.0, 0.5))


@pytest.mark.unit
def test_torus_projection_away_from_the_chop(torus: ChoppedTorus) -> None:
    """Off the chop the nearest point is the foot on the tube."""
    np.testing.assert_allclose(torus.project((-3.5, 0.0, 0.0)), (-3.0, 0.0, 0.0), atol=1e-12)
    np.testing.assert_allclose(torus.project((0.0, 2.0, 2.0)), (0.0, 2.0, 1.0), atol=1e-12)
    with pytest.raises(AmbiguousProjectionError):
        torus.project((0.0, 0.0, 0.3))
    with pytest.raises(AmbiguousProjectionError):
        torus.project((0.0, 2.0, 0.0))


@pytest.mark.unit
def test_torus_projection_onto_the_chop_curve(torus: ChoppedTorus) -> None:
    """Beyond the chop plane the nearest point lies on the boundary curve."""
    query = np.array([2.6, 1.0, 0.5])
    foot = torus.project(query)
    assert foot[0] == pytest.approx(2.0, abs=1e-12)
    assert torus.contains(foot).all()

    v = np.linspace(-0.5 * math.pi, 0.5 * math.pi, 200_001)
    rho = 2.0 + np.cos(v)
    curve = np.column_stack((np.full_like(v, 2.0), np.sqrt(rho * rho - 4.0), np.sin(v)))
    best = float(np.linalg.norm(curve - query, axis=1).min())
    assert float(np.linalg.norm(foot - query)) <= best + 1e-9


@pytest.mark.unit
@pytest.mark.parametrize("kind", list(ManifoldKind))
def test_projection_fixes_points_on_the_manifold(kind: ManifoldKind) -> None:
    """Projecting a sample point returns the point itself."""
    spec = get_manifold(kind)
    for point in spec.sample_uniform(25, seed=3).points:
        np.testing.assert_allclose(spec.project(point), point, atol=1e-9)


@pytest.mark.unit
@pytest.mark.parametrize("kind", list(ManifoldKind))
def test_samples_lie_on_the_manifold_and_are_reproducible(kind: ManifoldKind) -> None:
    """Samples pass validation and depend only on the seed."""
    spec = get_manifold(kind)
    first = spec.sample_uniform(500, seed=7)
    again = spec.sample_uniform(500, seed=7)
    other = spec.sample_uniform(500, seed=8)
    assert len(first) == 500
    assert first.dim == spec.ambient_dim
    assert first.seed == 7
    assert first.source == str(kind)
    spec.validate_cloud(first)
    np.testing.assert_array_equal(first.points, again.points)
    assert not np.array_equal(first.points, other.points)


@pytest.mark.unit
def test_validate_cloud_reports_offenders(cylinder: Cylinder) -> None:
    """A point off the surface fails validation."""
    cloud = PointCloud.from_points([[1.0, 0.0, 0.5], [0.5, 0.0, 0.5]])
    with pytest.raises(OffManifoldError, match="index 1"):
        cylinder.validate_cloud(cloud)


@pytest.mark.unit
def test_torus_samples_respect_the_chop(torus: ChoppedTorus) -> None:
    """No sample lies beyond the plane x = 2."""
    points = torus.sample_uniform(20_000, seed=5).points
    assert points[:, 0].max() < 2.0


@pytest.mark.integration
def test_cylinder_heights_are_uniform(cylinder: Cylinder) -> None:
    """The mean height of a uniform sample is 1/2 within four standard errors."""
    n = 1_000_000
    heights = cylinder.sample_uniform(n, seed=21).points[:, 2]
    assert abs(float(heights.mean()) - 0.5) < 4 * (1 / math.sqrt(12)) / math.sqrt(n)


@pytest.mark.integration
def test_semicircle_arc_counts_are_uniform(semicircle: Semicircle) -> None:
    """Seven equal arcs each receive n/7 points within binomial noise."""
    n = 1_000_000
    points = semicircle.sample_uniform(n, seed=22).points
    angles = np.arctan2(points[:, 1], points[:, 0])
    counts = np.bincount(np.minimum((angles / (math.pi / 7)).astype(int), 6), minlength=7)
    sigma = math.sqrt(n * (1 / 7) * (6 / 7))
    assert np.all(np.abs(counts - n / 7) < 5 * sigma)


@pytest.mark.integration
def test_torus_sampling_is_area_uniform(torus: ChoppedTorus) -> None:
    """The outer half (cos v > 0) receives its share of the area."""
    removed = 8 * math.pi**2 - torus.surface_area()
    outer = 2 * math.pi * (2 * math.pi + 2) - removed
    expected = outer / torus.surface_area()
    n = 200_000
    points = torus.sample_uniform(n, seed=23).points
    fraction = float((np.hypot(points[:, 0], points[:, 1]) > 2.0).mean())
    assert abs(fraction - expected) < 5 * math.sqrt(expected * (1 - expected) / n)


def _cell_of(kind: ManifoldKind, points: np.ndarray) -> np.ndarray:
    """Index of an equal-parameter cell; 50 arcs, 5 bands by 10 sectors, or 50 tube-angle bins."""
    if kind is ManifoldKind.SEMICIRCLE:
        angle = np.arctan2(points[:, 1], points[:, 0])
        return np.minimum((angle / (math.pi / CHI_SQUARED_CELLS)).astype(int), CHI_SQUARED_CELLS - 1)
    if kind is ManifoldKind.CYLINDER:
        band = np.minimum((points[:, 2] * 5).astype(int), 4)
        sector = np.minimum(((np.arctan2(points[:, 1], points[:, 0]) + math.pi) / (math.pi / 5)).astype(int), 9)
        return band * 10 + sector
    v = np.arctan2(points[:, 2], np.hypot(points[:, 0], points[:, 1]) - TORUS_CENTER_RADIUS)
    v = np.where(v < -0.5 * math.pi, v + 2 * math.pi, v)
    width = 2 * math.pi / CHI_SQUARED_CELLS
    return np.minimum(((v + 0.5 * math.pi) / width).astype(int), CHI_SQUARED_CELLS - 1)


def _torus_bin_areas() -> np.ndarray:
    """Area of the chopped torus in each tube-angle bin starting at v = -π/2."""

    def strip(v: float) -> float:
        rho = TORUS_CENTER_RADIUS + TORUS_TUBE_RADIUS * math.cos(v)
        kept = 2 * math.pi - 2 * math.acos(min(1.0, TORUS_CHOP_X / rho))
        return TORUS_TUBE_RADIUS * rho * kept

    edges = np.linspace(-0.5 * math.pi, 1.5 * math.pi, CHI_SQUARED_CELLS + 1)
    return np.array([integrate.quad(strip, lo, hi)[0] for lo, hi in zip(edges[:-1], edges[1:], strict=True)])


@pytest.mark.integration
@pytest.mark.parametrize("kind", list(ManifoldKind))
def test_samples_pass_a_chi_squared_uniformity_test(kind: ManifoldKind) -> None:
    """Counts over 50 cells match the area share of each cell."""
    n = 200_000
    spec = get_manifold(kind)
    counts = np.bincount(_cell_of(kind, spec.sample_uniform(n, seed=26).points), minlength=CHI_SQUARED_CELLS)
    if kind is ManifoldKind.CHOPPED_TORUS:
        areas = _torus_bin_areas()
        assert areas.sum() == pytest.approx(spec.surface_area(), rel=1e-6)
    else:
        areas = np.ones(CHI_SQUARED_CELLS)
    expected = n * areas / areas.sum()
    assert stats.chisquare(counts, expected).pvalue > 1e-3


@pytest.mark.integration
def test_parametric_weights_integrate_to_the_area(torus: ChoppedTorus, cylinder: Cylinder) -> None:
    """A ball containing everything measures the whole surface."""
    torus_estimate = estimate_local_volume(torus, (0.0, 0.0, 0.0), 10.0, 1_000_000, seed=24)
    assert abs(torus_estimate.value - TRUE_TORUS_AREA) < 4 * torus_estimate.stderr
    cylinder_estimate = estimate_local_volume(cylinder, (0.0, 0.0, 0.5), 5.0, 10_000, seed=25)
    assert cylinder_estimate.value == pytest.approx(2 * math.pi)
    assert cylinder_estimate.stderr == pytest.approx(0.0, abs=1e-6)


@pytest.mark.unit
@pytest.mark.parametrize(("kind", "h"), [("semicircle", 0.01), ("cylinder", 0.05), ("torus", 0.1)])
def test_reference_mesh_covers_the_manifold(kind: str, h: float) -> None:
    """Every point of the manifold is within h of the mesh."""
    spec = get_manifold(kind)
    mesh = spec.reference_mesh(h)
    assert mesh.seed is None
    spec.validate_cloud(mesh)
    queries = spec.sample_uniform(20_000, seed=31).points
    distances, _ = cKDTree(mesh.points).query(queries)
    assert distances.max() <= h


@pytest.mark.unit
def test_semicircle_mesh_contains_both_endpoints(semicircle: Semicircle) -> None:
    """The mesh includes the boundary of the arc."""
    mesh = semicircle.reference_mesh(0.1).points
    np.testing.assert_allclose(mesh[0], (1.0, 0.0), atol=1e-15)
    np.testing.assert_allclose(mesh[-1], (-1.0, 0.0), atol=1e-15)


@pytest.mark.unit
def test_reference_mesh_limits() -> None:
    """Resolutions outside (0, δ) and meshes above the cap are rejected."""
    spec = Semicircle(mesh_cap=100)
    with pytest.raises(DomainError):
        spec.reference_mesh(1.0)
    with pytest.raises(DomainError):
        spec.reference_mesh(0.0)
    with pytest.raises(ResourceLimitError):
        spec.reference_mesh(0.01)
    assert len(spec.reference_mesh(0.1)) <= 100
