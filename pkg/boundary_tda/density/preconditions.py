"""Named precondition checks for an offset radius on a manifold."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from boundary_tda.manifolds import ManifoldSpec


class PreconditionCheck(NamedTuple):
    """One named check."""

    name: str
    passed: bool
    requirement: str


@dataclass(frozen=True, slots=True)
class PreconditionReport:
    """All checks for one (manifold, eps) pair."""

    eps: float
    checks: tuple[PreconditionCheck, ...]

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    def __getitem__(self, name: str) -> bool:
        """Return the outcome of a check by name."""
        for check in self.checks:
            if check.name == name:
                return check.passed
        raise KeyError(name)

    def failures(self) -> list[PreconditionCheck]:
        """Return the checks that failed."""
        return [check for check in self.checks if not check.passed]


def check_preconditions(spec: ManifoldSpec, eps: float) -> PreconditionReport:
    """
    Check the radius conditions under which the reconstruction guarantees apply.

    Args:
        spec: The manifold.
        eps: Offset radius.

    Returns:
        A report with one named boolean per condition. The deformation-retract
        guarantee and the sample-size bound both need eps_below_half_delta.

    """
    delta = spec.delta
    checks = (
        PreconditionCheck("eps_positive", eps > 0, "ε > 0"),
        PreconditionCheck("eps_below_half_delta", 0 < eps < delta / 2, f"ε < δ/2 = {delta / 2:g}"),
        PreconditionCheck("half_eps_in_beta_domain", 0 < eps / 2 < 2 * delta, f"ε/2 < 2δ = {2 * delta:g}"),
        PreconditionCheck("eps_below_delta", 0 < eps < delta, f"ε < δ = {delta:g} (local volume bounds)"),
        PreconditionCheck(
            "delta_below_reach",
            delta <= min(spec.reach_M, spec.reach_bM),
            f"δ ≤ min(reach(M), reach(∂M)) = {min(spec.reach_M, spec.reach_bM):g}",
        ),
    )
    return PreconditionReport(eps=eps, checks=checks)
