"""
Vietoris–Rips persistent homology for boundary_tda.

Package structure:
- filtration.py: simplices, filtrations and Rips construction
- reduction.py: boundary-matrix reduction over the two-element field
- barcode.py: intervals, Betti numbers, top-k bars and dominance counts
- export.py: barcode CSV and SVG
"""

from .barcode import Barcode, Interval, betti_at, dominance_count, top_k_intervals
from .export import (
    CSV_HEADER,
    RadiusScale,
    barcode_svg,
    format_barcode_csv,
    parse_barcode_csv,
    read_barcode_csv,
    write_barcode_csv,
)
from .filtration import Filtration, Simplex, build_rips, simplex_cap_from_env
from .reduction import PersistencePair, ReductionResult, compute_persistence, reduce_boundary

__all__ = [
    "CSV_HEADER",
    "Barcode",
    "Filtration",
    "Interval",
    "PersistencePair",
    "RadiusScale",
    "ReductionResult",
    "Simplex",
    "barcode_svg",
    "betti_at",
    "build_rips",
    "compute_persistence",
    "dominance_count",
    "format_barcode_csv",
    "parse_barcode_csv",
    "read_barcode_csv",
    "reduce_boundary",
    "simplex_cap_from_env",
    "top_k_intervals",
    "write_barcode_csv",
]
