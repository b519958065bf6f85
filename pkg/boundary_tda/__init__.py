"""
Sampling bounds and homology recovery for compact manifolds with boundary.

Computes the number of uniform samples after which the union of ε-balls
deformation retracts onto the manifold with a prescribed probability,
certifies ε-density of concrete samples, compares applicability against two
rival reconstruction criteria, and checks homology recovery with a built-in
Vietoris–Rips persistence engine.
"""

from boundary_tda.const import LOGGER

__version__ = "1.0.0"

__all__ = ["LOGGER", "__version__"]
