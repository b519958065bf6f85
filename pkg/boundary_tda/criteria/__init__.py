"""
Reconstruction-criteria comparison for boundary_tda.

Package structure:
- profiles.py: piecewise-constant μ-reach profiles
- feasibility.py: the three applicability tests and λ^cech
- report.py: CriteriaReport and compare_all
"""

from .feasibility import FeasibilityResult, attali_cech_feasible, chazal_feasible, lambda_cech, ours_feasible
from .profiles import MuPiece, MuReachProfile, semicircle_profile, step_profile
from .report import CriteriaReport, compare_all

__all__ = [
    "CriteriaReport",
    "FeasibilityResult",
    "MuPiece",
    "MuReachProfile",
    "attali_cech_feasible",
    "chazal_feasible",
    "compare_all",
    "lambda_cech",
    "ours_feasible",
    "semicircle_profile",
    "step_profile",
]
