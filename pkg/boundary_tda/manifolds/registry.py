"""Registry of the built-in manifold models."""

from __future__ import annotations

from types import MappingProxyType
from typing import TYPE_CHECKING

from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import DomainError

from .chopped_torus import ChoppedTorus
from .cylinder import Cylinder
from .semicircle import Semicircle

if TYPE_CHECKING:
    from collections.abc import Mapping

    from .base import ManifoldSpec

MANIFOLDS: Mapping[ManifoldKind, ManifoldSpec] = MappingProxyType(
    {
        ManifoldKind.SEMICIRCLE: Semicircle(),
        ManifoldKind.CYLINDER: Cylinder(),
        ManifoldKind.CHOPPED_TORUS: ChoppedTorus(),
    }
)


def get_manifold(kind: str | ManifoldKind) -> ManifoldSpec:
    """
    Look up a built-in manifold by name.

    Raises:
        DomainError: If the name is unknown.

    """
    try:
        return MANIFOLDS[ManifoldKind(kind)]
    except ValueError as exception:
        known = ", ".join(str(k) for k in ManifoldKind)
        msg = f"Unknown manifold {kind!r}; expected one of: {known}"
        raise DomainError(msg) from exception
