"""Side-by-side comparison of the reconstruction criteria on one dataset."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from boundary_tda.const import LOGGER
from boundary_tda.density import Verdict, classify, cloud_to_manifold_distance, sup_distance_to_cloud
from boundary_tda.utils.string_helpers import format_number

from .feasibility import FeasibilityResult, attali_cech_feasible, chazal_feasible, ours_feasible

if TYPE_CHECKING:
    from boundary_tda.manifolds import ManifoldSpec, PointCloud

    from .profiles import MuReachProfile

_CSV_FIELDS = (
    "manifold",
    "n",
    "eps",
    "mesh_h",
    "d_H",
    "d_H_upper",
    "density_verdict",
    "ours",
    "delta",
    "chazal",
    "chazal_margin",
    "attali_cech",
    "attali_cech_threshold",
    "attali_rips",
)


def _flag(value: bool | None) -> str:
    if value is None:
        return "undetermined"
    return "true" if value else "false"


@dataclass(frozen=True, slots=True)
class CriteriaReport:
    """
    Verdicts of the three criteria on one dataset.

    The measured d_H is a sup over a finite mesh and so a lower bound of the
    true manifold-to-sample distance; the rival criteria are tested against
    it. The ours verdict uses the certified upper bound d_H_upper.

    Attributes:
        manifold: Manifold identifier.
        n: Number of sample points.
        eps: Offset radius.
        mesh_h: Covering radius of the mesh.
        d_H: Measured Hausdorff distance.
        d_H_upper: Certified upper bound on the Hausdorff distance.
        density_verdict: Density verdict at eps/2.
        ours: Whether the deformation-retract criterion applies.
        delta: Condition number of the manifold.
        chazal: Chazal et al. verdict and best margin.
        attali_cech: Attali et al. Čech verdict and supremum threshold.
        attali_rips: False when the Čech test fails; None (undetermined) otherwise.
    """

    manifold: str
    n: int
    eps: float
    mesh_h: float
    d_H: float  # noqa: N815
    d_H_upper: float  # noqa: N815
    density_verdict: Verdict
    ours: bool
    delta: float
    chazal: FeasibilityResult
    attali_cech: FeasibilityResult
    attali_rips: bool | None

    def _values(self) -> tuple[str, ...]:
        return (
            self.manifold,
            str(self.n),
            format_number(self.eps),
            format_number(self.mesh_h),
            format_number(self.d_H),
            format_number(self.d_H_upper),
            str(self.density_verdict),
            _flag(self.ours),
            format_number(self.delta),
            _flag(self.chazal.applicable),
            format_number(self.chazal.margin),
            _flag(self.attali_cech.applicable),
            format_number(self.attali_cech.margin),
            _flag(self.attali_rips),
        )

    def to_text(self) -> str:
        """Return a flat key=value block, one key per line."""
        lines = [f"{key}={value}" for key, value in zip(_CSV_FIELDS, self._values(), strict=True)]
        lines.append("attali_rips_basis=dominated by attali_cech (lambda_rips < lambda_cech)")
        return "\n".join(lines) + "\n"

    @staticmethod
    def csv_header() -> str:
        """Return the CSV header row."""
        return ",".join(_CSV_FIELDS)

    def to_csv_row(self) -> str:
        """Return the report as one CSV row."""
        return ",".join(self._values())


def compare_all(
    spec: ManifoldSpec,
    cloud: PointCloud,
    eps: float,
    profile: MuReachProfile,
    mesh_h: float,
) -> CriteriaReport:
    """
    Run all three criteria on a sample.

    Args:
        spec: The manifold the cloud was drawn from.
        cloud: The sample.
        eps: Offset radius for the deformation-retract criterion.
        profile: μ-reach profile of the manifold.
        mesh_h: Covering radius of the reference mesh.

    Returns:
        The assembled report.

    """
    spec.validate_cloud(cloud)
    mesh = spec.reference_mesh(mesh_h)
    sup = sup_distance_to_cloud(mesh, cloud)
    d_upper = max(sup.distance + mesh_h, cloud_to_manifold_distance(spec, cloud))
    chazal = chazal_feasible(sup.distance, profile)
    cech = attali_cech_feasible(sup.distance, profile)
    report = CriteriaReport(
        manifold=str(spec.kind),
        n=len(cloud),
        eps=eps,
        mesh_h=mesh_h,
        d_H=sup.distance,
        d_H_upper=d_upper,
        density_verdict=classify(eps / 2, sup.distance, mesh_h),
        ours=ours_feasible(spec, d_upper, eps),
        delta=spec.delta,
        chazal=chazal,
        attali_cech=cech,
        attali_rips=False if not cech.applicable else None,
    )
    LOGGER.debug(
        "Criteria on %s (n=%d, eps=%g): ours=%s chazal=%s attali_cech=%s",
        spec.kind,
        len(cloud),
        eps,
        report.ours,
        chazal.applicable,
        cech.applicable,
    )
    return report
