"""
Deterministic SVG rendering helpers.

Figures are drawn with the non-interactive Agg backend and serialized with a
fixed hash salt and no date metadata, so identical inputs give identical bytes.
"""

from __future__ import annotations

import io
from typing import TYPE_CHECKING

import matplotlib as mpl

mpl.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

if TYPE_CHECKING:
    from collections.abc import Sequence

    from matplotlib.figure import Figure

SVG_HASH_SALT = "boundary-tda"


def figure_to_svg(fig: Figure) -> str:
    """Serialize a figure to SVG text and close it."""
    buffer = io.StringIO()
    with mpl.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def line_plot_svg(
    xs: Sequence[float],
    ys: Sequence[float],
    *,
    xlabel: str,
    ylabel: str,
    title: str,
) -> str:
    """Render a single polyline with labelled axes."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(xs, ys, color="tab:blue", linewidth=1.5, marker="o", markersize=2)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(visible=True, linewidth=0.3)
    fig.tight_layout()
    return figure_to_svg(fig)
