"""
Concrete manifolds with boundary for boundary_tda.

Package structure:
- base.py: the ManifoldSpec base class
- semicircle.py, cylinder.py, chopped_torus.py: built-in models
- point_cloud.py: PointCloud and its text format
- registry.py: lookup of the built-ins by name
- monte_carlo.py: local volume estimates
"""

from .base import ManifoldSpec
from .chopped_torus import ChoppedTorus
from .cylinder import Cylinder
from .monte_carlo import LocalVolumeEstimate, estimate_local_volume
from .point_cloud import PointCloud, format_point_cloud, parse_point_cloud, read_point_cloud, write_point_cloud
from .registry import MANIFOLDS, get_manifold
from .semicircle import Semicircle, semicircle_example_points

__all__ = [
    "MANIFOLDS",
    "ChoppedTorus",
    "Cylinder",
    "LocalVolumeEstimate",
    "ManifoldSpec",
    "PointCloud",
    "Semicircle",
    "estimate_local_volume",
    "format_point_cloud",
    "get_manifold",
    "parse_point_cloud",
    "read_point_cloud",
    "semicircle_example_points",
    "write_point_cloud",
]
