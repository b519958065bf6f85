"""Parameter types for the sampling bound."""

from __future__ import annotations

from dataclasses import dataclass

from boundary_tda.exceptions import DomainError
from boundary_tda.utils.validators import require_in_range, require_positive, require_positive_int


@dataclass(frozen=True, slots=True)
class BoundParams:
    """
    Manifold parameters feeding β(x) and n*.

    Attributes:
        k: Intrinsic dimension.
        vol_M: k-dimensional volume of the manifold.
        delta: Condition number δ (below both reach(M) and reach(∂M)).
    """

    k: int
    vol_M: float  # noqa: N815
    delta: float

    def __post_init__(self) -> None:
        """Validate the parameters."""
        require_positive_int("k", self.k)
        require_positive("vol_M", self.vol_M)
        require_positive("delta", self.delta)


@dataclass(frozen=True, slots=True)
class BoundQuery:
    """
    An offset radius and failure probability.

    Attributes:
        eps: Offset radius ε.
        gamma: Failure probability γ in (0, 1).
    """

    eps: float
    gamma: float

    def __post_init__(self) -> None:
        """Validate the query."""
        require_positive("eps", self.eps)
        require_in_range("gamma", self.gamma, 0.0, 1.0, min_inclusive=False, max_inclusive=False)

    def check_against(self, params: BoundParams) -> None:
        """
        Check the sample-size regime ε < δ/2.

        Raises:
            DomainError: If eps is not strictly below delta / 2.

        """
        if not self.eps < params.delta / 2:
            msg = (
                f"ε < δ/2 violated (sample-size bound): eps={self.eps!r}, "
                f"delta/2={params.delta / 2!r}"
            )
            raise DomainError(msg)
