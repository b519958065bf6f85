"""Utils package for boundary_tda."""

from .string_helpers import format_number, format_point, parse_number
from .validators import require_finite, require_in_range, require_positive, require_positive_int

__all__ = [
    "format_number",
    "format_point",
    "parse_number",
    "require_finite",
    "require_in_range",
    "require_positive",
    "require_positive_int",
]
