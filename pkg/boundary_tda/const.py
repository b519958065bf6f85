"""Constants for the boundary_tda package."""

from logging import Logger, getLogger
import math

from boundary_tda.data import ManifoldKind

LOGGER: Logger = getLogger(__package__)

# Package metadata
PACKAGE_NAME = "boundary_tda"
PROG_NAME = "boundary-tda"

# Numerical tolerances
ON_MANIFOLD_TOLERANCE = 1e-9
MEDIAL_AXIS_TOLERANCE = 1e-9
CONTINUED_FRACTION_EPSILON = 1e-15
CONTINUED_FRACTION_MAX_ITERATIONS = 500

# Resource caps
ENV_SIMPLEX_CAP = "BTDA_SIMPLEX_CAP"
DEFAULT_SIMPLEX_CAP = 50_000_000
DEFAULT_POINT_CAP = 12_000
DEFAULT_MESH_CAP = 5_000_000

# Persistence presentation defaults
DEFAULT_TOP_K = 20
DEFAULT_DOMINANCE_FACTOR = 3.0
DEFAULT_MAX_DIM = 2

# Bound defaults (the anchoring experiment settings)
DEFAULT_EPS = 0.49
DEFAULT_GAMMA = 0.1
DEFAULT_SEED = 1

# Sweep grids, step 0.01
GAMMA_GRID: tuple[float, ...] = tuple(round(0.05 + 0.01 * i, 2) for i in range(91))
EPS_GRID: tuple[float, ...] = tuple(round(0.15 + 0.01 * i, 2) for i in range(36))

# Chopped torus geometry: tube radius 1, centre-circle radius 2, chop plane x = 2
TORUS_TUBE_RADIUS = 1.0
TORUS_CENTER_RADIUS = 2.0
TORUS_CHOP_X = 2.0
# Volume constant of the sample-size bound; surface_area() gives the true area (see DESIGN.md)
TORUS_VOLUME = (8 - 0.522) * math.pi**2

# Pipeline thinning radius and Rips truncation (Euclidean diameter scale)
DEFAULT_NET_RADIUS: dict[ManifoldKind, float] = {
    ManifoldKind.SEMICIRCLE: 0.05,
    ManifoldKind.CYLINDER: 0.15,
    ManifoldKind.CHOPPED_TORUS: 0.25,
}
DEFAULT_PIPELINE_R_MAX: dict[ManifoldKind, float] = {
    ManifoldKind.SEMICIRCLE: 0.5,
    ManifoldKind.CYLINDER: 0.8,
    ManifoldKind.CHOPPED_TORUS: 1.6,
}
# Reference-mesh covering radius for the pipeline density certificate
DEFAULT_PIPELINE_MESH_H: dict[ManifoldKind, float] = {
    ManifoldKind.SEMICIRCLE: 1e-4,
    ManifoldKind.CYLINDER: 5e-3,
    ManifoldKind.CHOPPED_TORUS: 1e-2,
}

# Chunk size for Monte Carlo and nearest-neighbour batches
DEFAULT_CHUNK_SIZE = 1_000_000

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_VERIFICATION = 3
