"""
Vietoris–Rips filtrations.

A simplex enters at the largest pairwise distance among its vertices (the
Euclidean diameter). Simplices are ordered by (value, dimension, vertices),
which places every face before its cofaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
import math
import os
from typing import TYPE_CHECKING, NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from boundary_tda.const import DEFAULT_POINT_CAP, DEFAULT_SIMPLEX_CAP, ENV_SIMPLEX_CAP, LOGGER
from boundary_tda.exceptions import DomainError, FiltrationError, ResourceLimitError

if TYPE_CHECKING:
    from collections.abc import Iterable

    from boundary_tda.manifolds import PointCloud

MAX_SUPPORTED_DIM = 3


class Simplex(NamedTuple):
    """A simplex as ascending vertex indices with its filtration value."""

    vertices: tuple[int, ...]
    value: float

    @property
    def dim(self) -> int:
        """Dimension of the simplex."""
        return len(self.vertices) - 1

    def sort_key(self) -> tuple[float, int, tuple[int, ...]]:
        """Key ordering simplices within a filtration."""
        return (self.value, len(self.vertices), self.vertices)

    def faces(self) -> list[tuple[int, ...]]:
        """Vertex tuples of the codimension-one faces."""
        if len(self.vertices) < 2:  # noqa: PLR2004
            return []
        return list(combinations(self.vertices, len(self.vertices) - 1))


@dataclass(frozen=True, slots=True)
class Filtration:
    """
    An ordered simplicial filtration.

    Attributes:
        simplices: Simplices sorted by (value, dimension, vertices).
        r_max: Largest value admitted when the filtration was built.
        max_dim: Largest simplex dimension admitted.
    """

    simplices: tuple[Simplex, ...]
    r_max: float = math.inf
    max_dim: int = MAX_SUPPORTED_DIM
    _index: dict[tuple[int, ...], int] = field(default_factory=dict, init=False, repr=False, compare=False)

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Simplex],
        r_max: float = math.inf,
        max_dim: int | None = None,
    ) -> Filtration:
        """Sort simplices into a filtration."""
        ordered = tuple(sorted(simplices, key=Simplex.sort_key))
        if max_dim is None:
            max_dim = max((s.dim for s in ordered), default=0)
        return cls(ordered, r_max=r_max, max_dim=max_dim)

    def __len__(self) -> int:
        """Return the number of simplices."""
        return len(self.simplices)

    def index(self) -> dict[tuple[int, ...], int]:
        """Return the position of every simplex, keyed by its vertices."""
        if not self._index:
            self._index.update((s.vertices, i) for i, s in enumerate(self.simplices))
        return self._index

    def count_by_dim(self, r: float = math.inf) -> dict[int, int]:
        """Count simplices with value at most r, per dimension."""
        counts: dict[int, int] = {}
        for simplex in self.simplices:
            if simplex.value <= r:
                counts[simplex.dim] = counts.get(simplex.dim, 0) + 1
        return counts

    def euler_characteristic(self, r: float = math.inf) -> int:
        """Return the alternating simplex count of the subcomplex at value r."""
        return sum((-1) ** dim * count for dim, count in self.count_by_dim(r).items())

    def validate(self) -> None:
        """
        Check the filtration property.

        Raises:
            FiltrationError: If a face is missing, comes later, or has a larger value.

        """
        index = self.index()
        if len(index) != len(self.simplices):
            msg = "Filtration contains duplicate simplices"
            raise FiltrationError(msg)
        for position, simplex in enumerate(self.simplices):
            for face in simplex.faces():
                face_position = index.get(face)
                if face_position is None:
                    msg = f"Face {face} of simplex {simplex.vertices} is missing"
                    raise FiltrationError(msg)
                if face_position >= position or self.simplices[face_position].value > simplex.value:
                    msg = f"Face {face} enters after simplex {simplex.vertices}"
                    raise FiltrationError(msg)


def simplex_cap_from_env(default: int = DEFAULT_SIMPLEX_CAP) -> int:
    """
    Return the simplex cap, honouring the BTDA_SIMPLEX_CAP environment variable.

    Raises:
        DomainError: If the variable is set but not a positive integer.

    """
    raw = os.environ.get(ENV_SIMPLEX_CAP)
    if raw is None or not raw.strip():
        return default
    try:
        cap = int(raw)
    except ValueError as exception:
        msg = f"{ENV_SIMPLEX_CAP} must be a positive integer, got {raw!r}"
        raise DomainError(msg) from exception
    if cap < 1:
        msg = f"{ENV_SIMPLEX_CAP} must be a positive integer, got {raw!r}"
        raise DomainError(msg)
    return cap


def _rips_edges(points: np.ndarray, r_max: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = points.shape[0]
    if math.isinf(r_max):
        first, second = np.triu_indices(n, k=1)
    else:
        pairs = cKDTree(points).query_pairs(r_max, output_type="ndarray")
        pairs = pairs.reshape(-1, 2)
        first, second = pairs.min(axis=1), pairs.max(axis=1)
    diff = points[first] - points[second]
    lengths = np.sqrt(np.sum(diff * diff, axis=1))
    keep = lengths <= r_max
    return first[keep], second[keep], lengths[keep]


def build_rips(
    cloud: PointCloud,
    r_max: float,
    max_dim: int,
    *,
    simplex_cap: int | None = None,
    point_cap: int = DEFAULT_POINT_CAP,
) -> Filtration:
    """
    Build the Vietoris–Rips filtration of a cloud.

    Args:
        cloud: The points.
        r_max: Largest diameter admitted (may be inf).
        max_dim: Largest simplex dimension, 0 to 3.
        simplex_cap: Simplex budget; defaults to BTDA_SIMPLEX_CAP or 5·10⁷.
        point_cap: Point budget.

    Returns:
        Every simplex of dimension at most max_dim with diameter at most r_max.

    Raises:
        DomainError: If the cloud is empty or an argument is out of range.
        ResourceLimitError: If a point or simplex budget is exceeded.

    """
    if len(cloud) == 0:
        msg = "Cannot build a filtration of an empty cloud"
        raise DomainError(msg)
    if math.isnan(r_max) or r_max <= 0:
        msg = f"r_max must be positive, got {r_max!r}"
        raise DomainError(msg)
    if not 0 <= max_dim <= MAX_SUPPORTED_DIM:
        msg = f"max_dim must be between 0 and {MAX_SUPPORTED_DIM}, got {max_dim!r}"
        raise DomainError(msg)
    if len(cloud) > point_cap:
        msg = f"Cloud has {len(cloud)} points, cap is {point_cap}"
        raise ResourceLimitError(msg)
    cap = simplex_cap_from_env() if simplex_cap is None else simplex_cap

    n = len(cloud)
    simplices = [Simplex((v,), 0.0) for v in range(n)]
    if max_dim >= 1:
        if math.isinf(r_max) and n + n * (n - 1) // 2 > cap:
            msg = f"Rips complex has {n + n * (n - 1) // 2} simplices up to dimension 1, cap is {cap}"
            raise ResourceLimitError(msg)
        first, second, lengths = _rips_edges(cloud.points, r_max)
        if n + lengths.size > cap:
            msg = f"Rips complex has {n + lengths.size} simplices up to dimension 1, cap is {cap}"
            raise ResourceLimitError(msg)
        edge_length: dict[tuple[int, int], float] = {}
        higher: list[set[int]] = [set() for _ in range(n)]
        for i, j, length in zip(first.tolist(), second.tolist(), lengths.tolist(), strict=True):
            edge_length[i, j] = length
            higher[i].add(j)
        simplices.extend(Simplex(edge, length) for edge, length in edge_length.items())

        def expand(vertices: tuple[int, ...], value: float, candidates: set[int]) -> None:
            for w in sorted(candidates):
                coface = (*vertices, w)
                coface_value = max(value, *(edge_length[u, w] for u in vertices))
                simplices.append(Simplex(coface, coface_value))
                if len(simplices) > cap:
                    msg = f"Rips complex exceeds the simplex cap of {cap}"
                    raise ResourceLimitError(msg)
                if len(coface) <= max_dim:
                    expand(coface, coface_value, candidates & higher[w])

        if max_dim >= 2:  # noqa: PLR2004
            for (i, j), length in edge_length.items():
                expand((i, j), length, higher[i] & higher[j])

    filtration = Filtration.from_simplices(simplices, r_max=r_max, max_dim=max_dim)
    LOGGER.debug(
        "Rips filtration on %d points (r_max=%g, max_dim=%d): %s",
        n,
        r_max,
        max_dim,
        filtration.count_by_dim(),
    )
    return filtration
