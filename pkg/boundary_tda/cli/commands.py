"""
Command implementations.

Every command computes all of its output in memory and returns it as a
CommandOutput; the entry point writes files only after a command succeeds.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from boundary_tda.bounds import BoundQuery, evaluate_bound, sample_size, sweep_eps, sweep_gamma
from boundary_tda.const import (
    DEFAULT_NET_RADIUS,
    DEFAULT_PIPELINE_MESH_H,
    DEFAULT_PIPELINE_R_MAX,
    EXIT_OK,
    EXIT_VERIFICATION,
    LOGGER,
)
from boundary_tda.criteria import compare_all, semicircle_profile, step_profile
from boundary_tda.data import ManifoldKind
from boundary_tda.density import certify_density, check_preconditions, greedy_net
from boundary_tda.exceptions import BoundaryTdaError, PipelineStageError, UsageError
from boundary_tda.manifolds import (
    PointCloud,
    format_point_cloud,
    get_manifold,
    read_point_cloud,
    semicircle_example_points,
)
from boundary_tda.persistence import (
    RadiusScale,
    barcode_svg,
    build_rips,
    compute_persistence,
    dominance_count,
    format_barcode_csv,
    top_k_intervals,
)
from boundary_tda.utils.plotting import line_plot_svg
from boundary_tda.utils.string_helpers import format_number

from .schemas import Command, OutputFormat, RunConfig

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator
    from pathlib import Path

    from boundary_tda.bounds import SweepRow
    from boundary_tda.manifolds import ManifoldSpec
    from boundary_tda.persistence import Barcode


@dataclass(slots=True)
class CommandOutput:
    """What a command prints, the files it writes, and its exit status."""

    stdout: str = ""
    artifacts: dict[Path, str] = field(default_factory=dict)
    exit_code: int = EXIT_OK


def _key_values(pairs: list[tuple[str, object]]) -> str:
    lines = []
    for key, value in pairs:
        text = format_number(value) if isinstance(value, float) else str(value)
        lines.append(f"{key}={text}")
    return "\n".join(lines) + "\n"


def _emit(config: RunConfig, text: str) -> CommandOutput:
    """Send a single artifact to --out if given, else to stdout."""
    if config.out_path is not None:
        return CommandOutput(artifacts={config.out_path: text})
    return CommandOutput(stdout=text)


def _load_cloud(config: RunConfig, spec: ManifoldSpec) -> PointCloud:
    if config.example:
        return semicircle_example_points()
    if config.cloud_path is not None:
        try:
            cloud = read_point_cloud(config.cloud_path)
        except OSError as exception:
            msg = f"Cannot read point cloud {config.cloud_path}: {exception.strerror}"
            raise UsageError(msg) from exception
        spec.validate_cloud(cloud)
        return cloud
    n = config.n or sample_size(BoundQuery(eps=config.eps, gamma=config.gamma), spec.bound_params)
    return spec.sample_uniform(n, config.seed)


def _mesh_h(config: RunConfig, radius: float) -> float:
    """Return the configured mesh resolution or the default capped below radius/8."""
    if config.mesh_h is not None:
        return config.mesh_h
    return min(DEFAULT_PIPELINE_MESH_H[config.manifold], radius / 8)


def _r_max(config: RunConfig) -> float:
    return config.r_max if config.r_max is not None else DEFAULT_PIPELINE_R_MAX[config.manifold]


def cmd_bound(config: RunConfig) -> CommandOutput:
    """Report n*, β(ε), β(ε/2), θ and the precondition checklist."""
    spec = get_manifold(config.manifold)
    params = spec.bound_params
    report = evaluate_bound(BoundQuery(eps=config.eps, gamma=config.gamma), params)
    checks = check_preconditions(spec, config.eps)
    fields: list[tuple[str, object]] = [
        ("manifold", spec.kind),
        ("k", params.k),
        ("vol_M", params.vol_M),
        ("delta", params.delta),
        ("eps", config.eps),
        ("gamma", config.gamma),
        ("n_star", report.n_star),
        ("value", report.value),
        ("beta_eps", report.beta_eps),
        ("beta_half_eps", report.beta_half),
        ("theta_eps", report.theta_eps),
        ("theta_half_eps", report.theta_half),
    ]
    if config.format is OutputFormat.CSV:
        header = ",".join(key for key, _ in fields)
        row = ",".join(format_number(v) if isinstance(v, float) else str(v) for _, v in fields)
        return _emit(config, f"{header}\n{row}\n")
    fields.extend((f"check.{c.name}", "pass" if c.passed else "fail") for c in checks.checks)
    return _emit(config, _key_values(fields))


def _sweep_output(config: RunConfig, rows: list[SweepRow], column: str, label: str) -> CommandOutput:
    if config.format is OutputFormat.SVG:
        svg = line_plot_svg(
            [row.x for row in rows],
            [row.n_star for row in rows],
            xlabel=label,
            ylabel="n*",
            title=f"Sample-size bound on the {config.manifold}",
        )
        return _emit(config, svg)
    lines = [f"{column},n_star"]
    lines.extend(f"{format_number(row.x)},{row.n_star}" for row in rows)
    return _emit(config, "\n".join(lines) + "\n")


def cmd_sweep_gamma(config: RunConfig) -> CommandOutput:
    """Tabulate n* over γ = 0.05, 0.06, ..., 0.95 at fixed ε."""
    spec = get_manifold(config.manifold)
    rows = sweep_gamma(config.eps, spec.bound_params)
    return _sweep_output(config, rows, "gamma", f"γ (ε = {config.eps:g})")


def cmd_sweep_eps(config: RunConfig) -> CommandOutput:
    """Tabulate n* over ε = 0.15, 0.16, ..., 0.50 (below δ/2) at fixed γ."""
    spec = get_manifold(config.manifold)
    rows = sweep_eps(config.gamma, spec.bound_params)
    return _sweep_output(config, rows, "eps", f"ε (γ = {config.gamma:g})")


def cmd_sample(config: RunConfig) -> CommandOutput:
    """Sample the manifold; n defaults to n*."""
    spec = get_manifold(config.manifold)
    return _emit(config, format_point_cloud(_load_cloud(config, spec)))


def cmd_density(config: RunConfig) -> CommandOutput:
    """Certify ε-density of a sampled or loaded cloud."""
    spec = get_manifold(config.manifold)
    cloud = _load_cloud(config, spec)
    certificate = certify_density(spec, cloud, config.eps, _mesh_h(config, config.eps))
    return _emit(config, certificate.to_record() + "\n")


def _persistence_of(config: RunConfig, cloud: PointCloud, net_radius: float) -> tuple[PointCloud, Barcode]:
    if net_radius > 0:
        cloud = greedy_net(cloud, net_radius)
    filtration = build_rips(cloud, _r_max(config), config.max_dim)
    return cloud, compute_persistence(filtration)


def cmd_persistence(config: RunConfig) -> CommandOutput:
    """Compute the Rips barcode of a sampled or loaded cloud."""
    spec = get_manifold(config.manifold)
    cloud = _load_cloud(config, spec)
    _, barcode = _persistence_of(config, cloud, config.net_radius or 0.0)
    if config.format is OutputFormat.SVG:
        return _emit(config, barcode_svg(barcode, scale=config.scale, top_k=config.top_k))
    return _emit(config, format_barcode_csv(barcode))


def cmd_criteria(config: RunConfig) -> CommandOutput:
    """Compare the three reconstruction criteria on a cloud."""
    spec = get_manifold(config.manifold)
    cloud = _load_cloud(config, spec)
    if spec.kind is ManifoldKind.SEMICIRCLE:
        profile = semicircle_profile()
    else:
        profile = step_profile(min(spec.reach_M, spec.reach_bM))
    report = compare_all(spec, cloud, config.eps, profile, _mesh_h(config, config.eps))
    if config.format is OutputFormat.CSV:
        return _emit(config, f"{report.csv_header()}\n{report.to_csv_row()}\n")
    return _emit(config, report.to_text())


@contextmanager
def _stage(name: str) -> Iterator[None]:
    LOGGER.info("Pipeline stage: %s", name)
    try:
        yield
    except PipelineStageError:
        raise
    except BoundaryTdaError as exception:
        msg = f"stage '{name}' failed: {exception}"
        raise PipelineStageError(msg) from exception


def cmd_pipeline(config: RunConfig) -> CommandOutput:
    """
    Run sample, density, thinning, persistence and the H1 rank check.

    Exits with the verification status when the number of dominant H1 bars
    differs from the manifold's first Betti number.
    """
    spec = get_manifold(config.manifold)
    out_dir = config.out_path
    if out_dir is None:
        msg = "pipeline needs --out"
        raise UsageError(msg)

    with _stage("sample"):
        cloud = _load_cloud(config, spec)
    with _stage("density"):
        density_eps = config.eps / 2
        certificate = certify_density(spec, cloud, density_eps, _mesh_h(config, density_eps))
    net_radius = config.net_radius if config.net_radius is not None else DEFAULT_NET_RADIUS[spec.kind]
    with _stage("persistence"):
        net, barcode = _persistence_of(config, cloud, net_radius)
    with _stage("report"):
        top = top_k_intervals(barcode, 1, config.top_k)
        dominant = dominance_count(barcode, 1, config.dominance_factor)
        svg = barcode_svg(
            barcode,
            scale=config.scale,
            top_k=config.top_k,
            title=f"{spec.kind}: n={len(cloud)}, seed={cloud.seed}",
        )

    passed = dominant == spec.expected_h1_rank
    summary: list[tuple[str, object]] = [
        ("manifold", spec.kind),
        ("eps", config.eps),
        ("gamma", config.gamma),
        ("seed", "none" if cloud.seed is None else cloud.seed),
        ("n", len(cloud)),
        ("density_eps", density_eps),
        ("density_verdict", certificate.verdict),
        ("net_radius", net_radius),
        ("net_size", len(net)),
        ("r_max_diameter", _r_max(config)),
        ("r_max_radius", _r_max(config) * RadiusScale.RADIUS.factor),
        ("max_dim", config.max_dim),
    ]
    for rank, interval in enumerate(top, start=1):
        length = barcode.effective_length(interval)
        bar = f"{format_number(interval.birth)},{format_number(interval.death)},{length!r}"
        summary.append((f"h1_bar_{rank}", bar))
    summary.extend(
        [
            ("h1_dominance_count", dominant),
            ("dominance_factor", config.dominance_factor),
            ("expected_h1_rank", spec.expected_h1_rank),
            ("verification", "pass" if passed else "fail"),
        ]
    )
    summary_text = _key_values(summary)
    if not passed:
        LOGGER.warning(
            "H1 verification failed on %s: %d dominant bars, expected %d",
            spec.kind,
            dominant,
            spec.expected_h1_rank,
        )
    return CommandOutput(
        stdout=summary_text,
        artifacts={
            out_dir / "cloud.txt": format_point_cloud(cloud),
            out_dir / "density.txt": certificate.to_record() + "\n",
            out_dir / "barcode.csv": format_barcode_csv(barcode),
            out_dir / "barcode.svg": svg,
            out_dir / "summary.txt": summary_text,
        },
        exit_code=EXIT_OK if passed else EXIT_VERIFICATION,
    )


COMMANDS: dict[Command, Callable[[RunConfig], CommandOutput]] = {
    Command.BOUND: cmd_bound,
    Command.SWEEP_GAMMA: cmd_sweep_gamma,
    Command.SWEEP_EPS: cmd_sweep_eps,
    Command.SAMPLE: cmd_sample,
    Command.DENSITY: cmd_density,
    Command.PERSISTENCE: cmd_persistence,
    Command.CRITERIA: cmd_criteria,
    Command.PIPELINE: cmd_pipeline,
}


def run_command(config: RunConfig) -> CommandOutput:
    """Dispatch a validated configuration to its command."""
    return COMMANDS[config.command](config)
