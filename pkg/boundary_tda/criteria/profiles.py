"""Piecewise-constant μ-reach profiles."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import NamedTuple

from boundary_tda.exceptions import DomainError
from boundary_tda.utils.validators import require_positive


class MuPiece(NamedTuple):
    """A value of r_μ on the half-open interval (lo, hi]."""

    lo: float
    hi: float
    value: float


@dataclass(frozen=True, slots=True)
class MuReachProfile:
    """
    A nonincreasing piecewise-constant function μ ↦ r_μ on (0, ∞).

    Attributes:
        pieces: Contiguous intervals (lo, hi] starting at 0 and ending at +inf.
    """

    pieces: tuple[MuPiece, ...]

    def __post_init__(self) -> None:
        """Check contiguity, coverage and monotonicity."""
        if not self.pieces:
            msg = "A μ-reach profile needs at least one piece"
            raise DomainError(msg)
        if self.pieces[0].lo != 0.0 or not math.isinf(self.pieces[-1].hi):
            msg = "A μ-reach profile must cover (0, inf)"
            raise DomainError(msg)
        for previous, current in zip(self.pieces, self.pieces[1:], strict=False):
            if previous.hi != current.lo:
                msg = f"Profile pieces are not contiguous at {previous.hi!r}"
                raise DomainError(msg)
            if current.value > previous.value:
                msg = f"μ-reach must be nonincreasing, got {previous.value!r} then {current.value!r}"
                raise DomainError(msg)
        for piece in self.pieces:
            if piece.value < 0 or piece.lo >= piece.hi:
                msg = f"Invalid profile piece {piece!r}"
                raise DomainError(msg)

    def value_at(self, mu: float) -> float:
        """Return r_μ."""
        mu = require_positive("mu", mu)
        for piece in self.pieces:
            if piece.lo < mu <= piece.hi:
                return piece.value
        return self.pieces[-1].value


def step_profile(reach: float) -> MuReachProfile:
    """Return the profile r_μ = reach for μ ≤ 1 and 0 beyond, as for a smooth set."""
    reach = require_positive("reach", reach)
    return MuReachProfile((MuPiece(0.0, 1.0, reach), MuPiece(1.0, math.inf, 0.0)))


def semicircle_profile() -> MuReachProfile:
    """Return the μ-reach profile of the unit semicircle."""
    return step_profile(1.0)
