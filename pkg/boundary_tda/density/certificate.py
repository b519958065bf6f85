"""
ε-density certificates.

A finite mesh of covering radius h turns the continuum statement "every point
of M has a sample within ε" into a three-valued verdict: the sup distance s
from mesh to cloud proves density when s + h ≤ ε, proves non-density when
s > ε (the witness itself is farther than ε), and is inconclusive in between.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

from boundary_tda.const import LOGGER
from boundary_tda.exceptions import DomainError, PointCloudFormatError
from boundary_tda.utils.string_helpers import format_number, format_point, parse_number
from boundary_tda.utils.validators import require_positive

from .hausdorff import sup_distance_to_cloud

if TYPE_CHECKING:
    from collections.abc import Iterable

    from boundary_tda.manifolds import ManifoldSpec, PointCloud

_RECORD_KEYS = ("verdict", "eps", "sup_dist", "mesh_h", "witness")


class Verdict(StrEnum):
    """Outcome of a density check."""

    DENSE = "Dense"
    NOT_DENSE = "NotDense"
    UNKNOWN = "Unknown"


def classify(eps: float, sup_dist: float, mesh_h: float) -> Verdict:
    """Return the verdict for a measured sup distance at mesh resolution mesh_h."""
    if sup_dist + mesh_h <= eps:
        return Verdict.DENSE
    if sup_dist > eps:
        return Verdict.NOT_DENSE
    return Verdict.UNKNOWN


@dataclass(frozen=True, slots=True)
class DensityCertificate:
    """
    Result of checking ε-density of a cloud on a manifold.

    Attributes:
        eps: Target radius.
        verdict: Dense, NotDense or Unknown.
        sup_dist: Measured sup over the mesh of the distance to the cloud.
        mesh_h: Covering radius of the mesh.
        witness: Mesh point achieving sup_dist.
    """

    eps: float
    verdict: Verdict
    sup_dist: float
    mesh_h: float
    witness: tuple[float, ...]

    def to_record(self) -> str:
        """Serialize to a single key=value line."""
        return (
            f"verdict={self.verdict} eps={format_number(self.eps)} "
            f"sup_dist={format_number(self.sup_dist)} mesh_h={format_number(self.mesh_h)} "
            f"witness={format_point(self.witness)}"
        )

    @classmethod
    def from_record(cls, record: str) -> DensityCertificate:
        """
        Parse a line written by to_record.

        Raises:
            PointCloudFormatError: If a key is missing or a value is malformed.

        """
        fields = dict(item.partition("=")[::2] for item in record.split())
        missing = [key for key in _RECORD_KEYS if not fields.get(key)]
        if missing:
            msg = f"Certificate record is missing {', '.join(missing)}"
            raise PointCloudFormatError(msg)
        try:
            return cls(
                eps=parse_number(fields["eps"]),
                verdict=Verdict(fields["verdict"]),
                sup_dist=parse_number(fields["sup_dist"]),
                mesh_h=parse_number(fields["mesh_h"]),
                witness=tuple(parse_number(value) for value in fields["witness"].split(",")),
            )
        except ValueError as exception:
            msg = f"Malformed certificate record: {record!r}"
            raise PointCloudFormatError(msg) from exception


def certify_density(
    spec: ManifoldSpec,
    cloud: PointCloud,
    eps: float,
    h: float,
    mesh: PointCloud | None = None,
) -> DensityCertificate:
    """
    Certify that a cloud is eps-dense on a manifold.

    Args:
        spec: The manifold.
        cloud: Points on the manifold.
        eps: Target radius.
        h: Mesh covering radius, 0 < h < eps/4.
        mesh: A prebuilt reference mesh of spec at resolution h.

    Returns:
        The certificate. A Dense verdict is sound: every point of M lies
        within h of a mesh point, which lies within sup_dist of the cloud.

    Raises:
        DomainError: If h is outside (0, eps/4).
        OffManifoldError: If the cloud is not on the manifold.
        ResourceLimitError: If the mesh exceeds its cap.

    """
    eps = require_positive("eps", eps)
    h = require_positive("h", h)
    if not h < eps / 4:
        msg = f"Mesh resolution must satisfy h < eps/4, got h={h!r}, eps={eps!r}"
        raise DomainError(msg)
    spec.validate_cloud(cloud)
    if mesh is None:
        mesh = spec.reference_mesh(h)
    sup = sup_distance_to_cloud(mesh, cloud)
    verdict = classify(eps, sup.distance, h)
    if verdict is Verdict.UNKNOWN:
        LOGGER.warning(
            "Density of %d points on %s at eps=%g is inconclusive (sup_dist=%.6g, h=%g)",
            len(cloud),
            spec.kind,
            eps,
            sup.distance,
            h,
        )
    return DensityCertificate(
        eps=eps,
        verdict=verdict,
        sup_dist=sup.distance,
        mesh_h=h,
        witness=tuple(float(c) for c in sup.witness),
    )


@dataclass(frozen=True, slots=True)
class DensityStatistics:
    """Verdict counts over repeated seeded samples."""

    n: int
    eps: float
    mesh_h: float
    seeds: tuple[int, ...]
    dense: int
    not_dense: int
    unknown: int

    @property
    def dense_fraction(self) -> float:
        """Fraction of seeds with a Dense verdict."""
        return self.dense / len(self.seeds) if self.seeds else 0.0


def density_statistics(
    spec: ManifoldSpec,
    n: int,
    eps: float,
    h: float,
    seeds: Iterable[int],
) -> DensityStatistics:
    """
    Sample n points per seed and count density verdicts, reusing one mesh.

    The density guarantee is probabilistic, so this is reported rather than
    asserted per seed.
    """
    seeds = tuple(seeds)
    mesh = spec.reference_mesh(h)
    counts = dict.fromkeys(Verdict, 0)
    for seed in seeds:
        cloud = spec.sample_uniform(n, seed)
        counts[certify_density(spec, cloud, eps, h, mesh=mesh).verdict] += 1
    LOGGER.info(
        "Density over %d seeds on %s (n=%d, eps=%g): %d dense, %d not dense, %d unknown",
        len(seeds),
        spec.kind,
        n,
        eps,
        counts[Verdict.DENSE],
        counts[Verdict.NOT_DENSE],
        counts[Verdict.UNKNOWN],
    )
    return DensityStatistics(
        n=n,
        eps=eps,
        mesh_h=h,
        seeds=seeds,
        dense=counts[Verdict.DENSE],
        not_dense=counts[Verdict.NOT_DENSE],
        unknown=counts[Verdict.UNKNOWN],
    )
