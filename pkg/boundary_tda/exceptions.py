"""
Exception hierarchy for boundary_tda.

Every error raised on purpose by the package derives from BoundaryTdaError so
callers (and the CLI) can separate computation failures from programming
errors. Precondition failures additionally subclass the matching builtin.
"""

from __future__ import annotations


class BoundaryTdaError(Exception):
    """Base exception for all boundary_tda errors."""


class DomainError(BoundaryTdaError, ValueError):
    """Exception to indicate an argument outside an operation's domain."""


class ConvergenceError(BoundaryTdaError, ArithmeticError):
    """Exception to indicate an iterative kernel did not converge."""


class BoundOverflowError(BoundaryTdaError, OverflowError):
    """Exception to indicate a bound exceeds the double-precision range."""


class AmbiguousProjectionError(BoundaryTdaError, ValueError):
    """Exception to indicate a query point sits on the medial axis."""


class OffManifoldError(BoundaryTdaError, ValueError):
    """Exception to indicate points do not lie on their source manifold."""


class ManifoldDefinitionError(BoundaryTdaError):
    """Exception to indicate a manifold model violates its own constants."""


class DimensionMismatchError(BoundaryTdaError, ValueError):
    """Exception to indicate point sets live in different ambient spaces."""


class ResourceLimitError(BoundaryTdaError):
    """Exception to indicate a configured size cap would be exceeded."""


class FiltrationError(BoundaryTdaError):
    """Exception to indicate a filtration is missing faces or misordered."""


class PointCloudFormatError(BoundaryTdaError, ValueError):
    """Exception to indicate malformed point-cloud, barcode or certificate text."""


class UsageError(BoundaryTdaError):
    """Exception to indicate an invalid command-line configuration."""


class PipelineStageError(BoundaryTdaError):
    """Exception to indicate a pipeline stage failed; the message names the stage."""
