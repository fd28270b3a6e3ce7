"""Matplotlib rendering of suite results to image files.

Bar pairs per experiment (reusability vs. mean extra cost) with dashed
horizontal lines at the suite means.  Data fidelity lives in the plot-data
CSV files; these figures are the human-friendly view written alongside.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

# stable ids inside SVG output so repeated renders are byte-identical
matplotlib.rcParams["svg.hashsalt"] = "masip"

FIGURE_FORMATS = ("png", "svg")

_REUS_COLOR = "#2b6cb0"
_COST_COLOR = "#c05621"


def render_suite_figure(suite, path) -> Path:
    """Render one suite as a grouped bar chart; format follows the suffix."""
    path = Path(path)
    if path.suffix.lstrip(".") not in FIGURE_FORMATS:
        raise ValueError(f"unsupported figure format {path.suffix!r}")

    labels = [r.group_name for r in suite.results]
    reus = [float(r.reusability) for r in suite.results]
    cost = [float(r.mean_extra_cost) for r in suite.results]
    x = range(len(labels))

    width = max(6.0, 0.65 * len(labels) + 2.5)
    fig, ax = plt.subplots(figsize=(width, 4.2))
    ax.bar([i - 0.2 for i in x], reus, 0.4, label="reusability", color=_REUS_COLOR)
    ax.bar([i + 0.2 for i in x], cost, 0.4, label="mean extra cost", color=_COST_COLOR)
    ax.axhline(
        float(suite.mean_reusability), color=_REUS_COLOR, linestyle="--", linewidth=1
    )
    ax.axhline(
        float(suite.mean_extra_cost), color=_COST_COLOR, linestyle="--", linewidth=1
    )
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels, rotation=45 if len(labels) > 8 else 0, ha="right" if len(labels) > 8 else "center")
    ax.set_ylim(0, 100)
    ax.set_ylabel("percent of union instruction set")
    ax.set_title(f"{suite.catalog_name}, {suite.kind}-domain")
    ax.legend(loc="upper right")
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()

    metadata = {"Date": None} if path.suffix == ".svg" else None
    fig.savefig(path, dpi=150, metadata=metadata)
    plt.close(fig)
    return path
