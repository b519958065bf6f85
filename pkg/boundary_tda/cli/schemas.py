"""
Run configuration for the command-line interface.

Raw flag values are validated with voluptuous into a frozen RunConfig.
Cross-field checks name the violated precondition and the guarantee that
needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from pathlib import Path
from typing import Any

import voluptuous as vol

from boundary_tda.const import (
    DEFAULT_DOMINANCE_FACTOR,
    DEFAULT_EPS,
    DEFAULT_GAMMA,
    DEFAULT_MAX_DIM,
    DEFAULT_SEED,
    DEFAULT_TOP_K,
)
from boundary_tda.data import ManifoldKind
from boundary_tda.exceptions import UsageError
from boundary_tda.manifolds import get_manifold
from boundary_tda.persistence import RadiusScale
from boundary_tda.persistence.filtration import MAX_SUPPORTED_DIM


class Command(StrEnum):
    """CLI sub-commands."""

    BOUND = "bound"
    SWEEP_GAMMA = "sweep-gamma"
    SWEEP_EPS = "sweep-eps"
    SAMPLE = "sample"
    DENSITY = "density"
    PERSISTENCE = "persistence"
    CRITERIA = "criteria"
    PIPELINE = "pipeline"


class OutputFormat(StrEnum):
    """Output encodings."""

    CSV = "csv"
    SVG = "svg"
    TEXT = "text"


# Commands whose result depends on the sample-size bound at eps
_NEEDS_BOUND_REGIME = frozenset({Command.BOUND, Command.SWEEP_GAMMA, Command.PIPELINE})
_SVG_COMMANDS = frozenset({Command.SWEEP_GAMMA, Command.SWEEP_EPS, Command.PERSISTENCE, Command.PIPELINE})


@dataclass(frozen=True, slots=True)
class RunConfig:
    """
    A validated command invocation.

    Attributes:
        command: Sub-command to run.
        manifold: Built-in manifold.
        eps: Offset radius ε.
        gamma: Failure probability γ.
        n: Sample size; None means n* from the bound.
        seed: RNG seed.
        r_max: Rips truncation on the diameter scale; None means the manifold default.
        max_dim: Largest simplex dimension.
        mesh_h: Reference mesh covering radius; None means the manifold default.
        net_radius: Thinning radius before persistence; None means the command default.
        top_k: Bars reported per dimension.
        dominance_factor: Ratio separating dominant bars from the rest.
        scale: Axis scale of barcode plots.
        out_path: Output file, or directory for the pipeline.
        format: Output encoding.
        cloud_path: Existing point cloud to use instead of sampling.
        example: Use the eight-point semicircle example as the cloud.
        verbose: Debug logging.
    """

    command: Command
    manifold: ManifoldKind
    eps: float
    gamma: float
    n: int | None
    seed: int
    r_max: float | None
    max_dim: int
    mesh_h: float | None
    net_radius: float | None
    top_k: int
    dominance_factor: float
    scale: RadiusScale
    out_path: Path | None
    format: OutputFormat
    cloud_path: Path | None
    example: bool
    verbose: bool


def _positive(name: str, guarantee: str) -> vol.All:
    return vol.All(
        vol.Coerce(float),
        vol.Msg(vol.Range(min=0, min_included=False), f"{name} > 0 violated ({guarantee})"),
    )


def _optional_path(value: Any) -> Path | None:
    return None if value is None else Path(value)


def _check_cross_fields(data: dict[str, Any]) -> dict[str, Any]:
    """Apply checks that involve more than one field."""
    spec = get_manifold(data["manifold"])
    command = data["command"]
    eps = data["eps"]
    if command in _NEEDS_BOUND_REGIME and not eps < spec.delta / 2:
        msg = f"ε < δ/2 violated (sample-size bound): eps={eps!r}, delta/2={spec.delta / 2!r}"
        raise vol.Invalid(msg, path=["eps"])
    if command is Command.DENSITY and data["mesh_h"] is not None and not data["mesh_h"] < eps / 4:
        msg = f"h < ε/4 violated (density certificate): mesh_h={data['mesh_h']!r}, eps/4={eps / 4!r}"
        raise vol.Invalid(msg, path=["mesh_h"])
    if command is Command.PIPELINE:
        if data["mesh_h"] is not None and not data["mesh_h"] < eps / 8:
            msg = (
                f"h < ε/8 violated (density certificate at ε/2): mesh_h={data['mesh_h']!r}, "
                f"eps/8={eps / 8!r}"
            )
            raise vol.Invalid(msg, path=["mesh_h"])
        if data["out_path"] is None:
            msg = "pipeline needs --out, the directory receiving its artifacts"
            raise vol.Invalid(msg, path=["out_path"])
    if data["mesh_h"] is not None and not data["mesh_h"] < spec.delta:
        msg = f"h < δ violated (reference mesh): mesh_h={data['mesh_h']!r}, delta={spec.delta!r}"
        raise vol.Invalid(msg, path=["mesh_h"])
    if data["example"] and spec.kind is not ManifoldKind.SEMICIRCLE:
        msg = "--example is only defined for the semicircle"
        raise vol.Invalid(msg, path=["example"])
    if data["example"] and data["cloud_path"] is not None:
        msg = "--example and --cloud are mutually exclusive"
        raise vol.Invalid(msg, path=["example"])
    if data["format"] is OutputFormat.SVG and command not in _SVG_COMMANDS:
        msg = f"{command} has no SVG output"
        raise vol.Invalid(msg, path=["format"])
    return data


def get_run_schema() -> vol.Schema:
    """
    Get the schema validating raw CLI values.

    Returns:
        Voluptuous schema producing the keyword arguments of RunConfig.

    """
    return vol.Schema(
        vol.All(
            {
                vol.Required("command"): vol.Coerce(Command),
                vol.Required("manifold", default=str(ManifoldKind.CYLINDER)): vol.Coerce(ManifoldKind),
                vol.Required("eps", default=DEFAULT_EPS): _positive("ε", "offset radius"),
                vol.Required("gamma", default=DEFAULT_GAMMA): vol.All(
                    vol.Coerce(float),
                    vol.Msg(
                        vol.Range(min=0, max=1, min_included=False, max_included=False),
                        "0 < γ < 1 violated (failure probability)",
                    ),
                ),
                vol.Required("n", default=None): vol.Any(
                    None, vol.All(vol.Coerce(int), vol.Msg(vol.Range(min=1), "n ≥ 1 violated (sample size)"))
                ),
                vol.Required("seed", default=DEFAULT_SEED): vol.Coerce(int),
                vol.Required("r_max", default=None): vol.Any(None, _positive("r_max", "Rips truncation")),
                vol.Required("max_dim", default=DEFAULT_MAX_DIM): vol.All(
                    vol.Coerce(int),
                    vol.Msg(
                        vol.Range(min=0, max=MAX_SUPPORTED_DIM),
                        f"0 ≤ max_dim ≤ {MAX_SUPPORTED_DIM} violated (Rips construction)",
                    ),
                ),
                vol.Required("mesh_h", default=None): vol.Any(None, _positive("h", "reference mesh")),
                vol.Required("net_radius", default=None): vol.Any(
                    None,
                    vol.All(vol.Coerce(float), vol.Msg(vol.Range(min=0), "net radius ≥ 0 violated (thinning)")),
                ),
                vol.Required("top_k", default=DEFAULT_TOP_K): vol.All(
                    vol.Coerce(int), vol.Msg(vol.Range(min=1), "k ≥ 1 violated (top-k bars)")
                ),
                vol.Required("dominance_factor", default=DEFAULT_DOMINANCE_FACTOR): _positive(
                    "dominance factor", "dominant bar count"
                ),
                vol.Required("scale", default=str(RadiusScale.DIAMETER)): vol.Coerce(RadiusScale),
                vol.Required("out_path", default=None): _optional_path,
                vol.Required("format", default=str(OutputFormat.TEXT)): vol.Coerce(OutputFormat),
                vol.Required("cloud_path", default=None): _optional_path,
                vol.Required("example", default=False): bool,
                vol.Required("verbose", default=False): bool,
            },
            _check_cross_fields,
        ),
        extra=vol.REMOVE_EXTRA,
    )


def build_run_config(raw: dict[str, Any]) -> RunConfig:
    """
    Validate raw values into a RunConfig.

    Args:
        raw: Flag values keyed by RunConfig field name; None means unset.

    Returns:
        The validated configuration.

    Raises:
        UsageError: If any value violates a precondition.

    """
    cleaned = {key: value for key, value in raw.items() if value is not None}
    try:
        data = get_run_schema()(cleaned)
    except vol.MultipleInvalid as exception:
        msg = "; ".join(str(error) for error in exception.errors)
        raise UsageError(msg) from exception
    except vol.Invalid as exception:
        raise UsageError(str(exception)) from exception
    return RunConfig(**data)
