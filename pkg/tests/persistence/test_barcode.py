"""Tests for barcode summaries and export."""

from __future__ import annotations

import math
from pathlib import Path

import pytest

from boundary_tda.exceptions import DomainError, PointCloudFormatError
from boundary_tda.manifolds import PointCloud
from boundary_tda.persistence import (
    CSV_HEADER,
    Barcode,
    Interval,
    RadiusScale,
    barcode_svg,
    build_rips,
    compute_persistence,
    dominance_count,
    format_barcode_csv,
    parse_barcode_csv,
    read_barcode_csv,
    top_k_intervals,
    write_barcode_csv,
)

SQUARE = PointCloud.from_points([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


@pytest.fixture
def square_barcode() -> Barcode:
    """Barcode of the unit square's Rips filtration."""
    return compute_persistence(build_rips(SQUARE, 2.0, 2))


@pytest.mark.unit
def test_top_k_of_the_square(square_barcode: Barcode) -> None:
    """The square has exactly one presentable H1 bar."""
    assert top_k_intervals(square_barcode, 1, 20) == [Interval(1, 1.0, math.sqrt(2))]


@pytest.mark.unit
def test_top_k_orders_by_length_then_birth() -> None:
    """Longest first; equal lengths by earlier birth; zero-length bars dropped."""
    b = Barcode.from_intervals(
        [
            Interval(1, 0.5, 0.7),
            Interval(1, 0.1, 0.3),
            Interval(1, 0.2, 1.2),
            Interval(1, 0.4, 0.4),
            Interval(0, 0.0, 5.0),
        ]
    )
    assert top_k_intervals(b, 1, 20) == [Interval(1, 0.2, 1.2), Interval(1, 0.1, 0.3), Interval(1, 0.5, 0.7)]
    assert top_k_intervals(b, 1, 1) == [Interval(1, 0.2, 1.2)]
    with pytest.raises(DomainError):
        top_k_intervals(b, 1, 0)


@pytest.mark.unit
def test_truncated_barcodes_rank_live_classes_up_to_r_max() -> None:
    """A class still alive at r_max is as long as r_max minus its birth."""
    b = Barcode.from_intervals([Interval(1, 0.2, math.inf), Interval(1, 0.3, 0.5)], r_max=0.8)
    assert b.truncated
    assert b.effective_length(Interval(1, 0.2, math.inf)) == pytest.approx(0.6)
    assert top_k_intervals(b, 1, 20)[0] == Interval(1, 0.2, math.inf)

    untruncated = Barcode.from_intervals([Interval(0, 0.0, math.inf), Interval(0, 0.0, 0.3)])
    assert untruncated.effective_length(Interval(0, 0.0, math.inf)) is None
    assert top_k_intervals(untruncated, 0, 20) == [Interval(0, 0.0, 0.3)]

    truncated_h0 = Barcode.from_intervals([Interval(0, 0.0, math.inf), Interval(0, 0.0, 0.3)], r_max=0.8)
    assert top_k_intervals(truncated_h0, 0, 20) == [Interval(0, 0.0, math.inf), Interval(0, 0.0, 0.3)]


@pytest.mark.unit
@pytest.mark.parametrize(
    ("lengths", "expected"),
    [
        ([1.0], 1),
        ([1.0, 0.3], 1),
        ([1.0, 0.9, 0.1], 2),
        ([1.0, 0.9, 0.8, 0.2], 3),
        ([1.0, 0.5, 0.4], 3),
        ([], 0),
    ],
)
def test_dominance_count(lengths: list[float], expected: int) -> None:
    """The first gap of at least the factor separates dominant bars from noise."""
    b = Barcode.from_intervals([Interval(1, 0.0, length) for length in lengths])
    assert dominance_count(b, 1) == expected


@pytest.mark.unit
def test_dominance_factor_is_configurable() -> None:
    """A gentler factor finds the split earlier."""
    b = Barcode.from_intervals([Interval(1, 0.0, 1.0), Interval(1, 0.0, 0.5), Interval(1, 0.0, 0.4)])
    assert dominance_count(b, 1, factor=2.0) == 1
    with pytest.raises(DomainError):
        dominance_count(b, 1, factor=0.0)


@pytest.mark.unit
def test_scaled_and_radius_scale() -> None:
    """Ball-radius scale is half the diameter scale."""
    b = Barcode.from_intervals([Interval(1, 1.0, 3.0)], r_max=4.0)
    half = b.scaled(RadiusScale.RADIUS.factor)
    assert half.intervals == (Interval(1, 0.5, 1.5),)
    assert half.r_max == 2.0
    assert RadiusScale.DIAMETER.factor == 1.0


@pytest.mark.unit
def test_csv_round_trip(square_barcode: Barcode, tmp_path: Path) -> None:
    """CSV keeps every interval, writes inf literally and parses back."""
    text = format_barcode_csv(square_barcode)
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    assert "0,0.0,inf" in lines
    assert "1,1.0,1.4142135623730951" in lines
    path = tmp_path / "barcode.csv"
    write_barcode_csv(square_barcode, path)
    assert read_barcode_csv(path, r_max=2.0) == square_barcode


@pytest.mark.unit
@pytest.mark.parametrize(
    "text",
    ["", "dim,birth\n", "dim,birth,death\n1,0.5\n", "dim,birth,death\nx,0.5,1\n", "dim,birth,death\n1,2.0,1.0\n"],
    ids=["empty", "bad-header", "short-row", "bad-dim", "reversed"],
)
def test_malformed_csv(text: str) -> None:
    """Malformed barcode CSV raises a format error."""
    with pytest.raises(PointCloudFormatError):
        parse_barcode_csv(text)


@pytest.mark.unit
def test_svg_is_deterministic(square_barcode: Barcode) -> None:
    """Rendering twice gives identical bytes."""
    first = barcode_svg(square_barcode, scale=RadiusScale.RADIUS, top_k=20)
    second = barcode_svg(square_barcode, scale=RadiusScale.RADIUS, top_k=20)
    assert first == second
    assert first.lstrip().startswith("<?xml")
    assert "radius scale" in first
    assert "H1" in first


@pytest.mark.unit
def test_svg_of_an_empty_barcode() -> None:
    """A barcode without presentable bars still renders."""
    svg = barcode_svg(Barcode(()))
    assert "<svg" in svg
