"""
Density certification for boundary_tda.

Package structure:
- hausdorff.py: one-sided Hausdorff distances
- certificate.py: three-valued ε-density certificates and seeded statistics
- preconditions.py: named radius checks
- packing.py: greedy nets and packing numbers
"""

from .certificate import (
    DensityCertificate,
    DensityStatistics,
    Verdict,
    certify_density,
    classify,
    density_statistics,
)
from .hausdorff import SupDistance, cloud_to_manifold_distance, hausdorff_upper_bound, sup_distance_to_cloud
from .packing import greedy_net, greedy_net_indices, greedy_packing_number
from .preconditions import PreconditionCheck, PreconditionReport, check_preconditions

__all__ = [
    "DensityCertificate",
    "DensityStatistics",
    "PreconditionCheck",
    "PreconditionReport",
    "SupDistance",
    "Verdict",
    "certify_density",
    "check_preconditions",
    "classify",
    "cloud_to_manifold_distance",
    "density_statistics",
    "greedy_net",
    "greedy_net_indices",
    "greedy_packing_number",
    "hausdorff_upper_bound",
    "sup_distance_to_cloud",
]
