"""Figure rendering for the report-writing CLI paths.

Figures are drawn straight onto an Agg canvas (no pyplot, no global backend
state), so rendering works headless and never interferes with a host
application's matplotlib configuration.
"""

from __future__ import annotations

import os

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure


def render_extremal_figure(report, path: str | os.PathLike) -> None:
    """Index value per class, best first, with the maximum highlighted."""
    fig = Figure(figsize=(7.5, 4.5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    ranks = range(1, len(report.values) + 1)
    ax.plot(ranks, report.values, ".", markersize=4, color="#46608a", label="class members")
    ax.plot([1], [report.max_value], "o", markersize=9, fillstyle="none",
            color="#bb3322", label=f"maximum ({report.verdict})")
    ax.set_xlabel("rank within the diameter class")
    ax.set_ylabel(f"general Sombor index, alpha = {report.alpha:g}")
    ax.set_title(
        f"n = {report.n}, diameter {report.d}: {report.class_size} classes, "
        f"predicted {report.predicted_g6}"
    )
    ax.legend(loc="best", fontsize=9)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=140)


def render_lemma_figure(report, path: str | os.PathLike) -> None:
    """Margin against x, one curve per alpha (subsampled to at most eight)."""
    by_alpha: dict[float, list[tuple[float, float]]] = {}
    for alpha, x, value, _status in report.rows:
        by_alpha.setdefault(alpha, []).append((x, value))
    alphas = sorted(by_alpha)
    stride = max(1, len(alphas) // 8)
    fig = Figure(figsize=(7.5, 4.5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for alpha in alphas[::stride]:
        pts = by_alpha[alpha]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], lw=1.2,
                label=f"alpha = {alpha:.2f}")
    ax.axhline(0.0, color="black", lw=0.8)
    ax.set_xlabel("x")
    ax.set_ylabel("claimed-positive margin")
    ax.set_title(
        f"{report.lemma_id}: min margin {report.min_margin:.3g}, "
        f"{len(report.violations)} violations (grid evidence)"
    )
    ax.legend(loc="best", fontsize=8, ncol=2)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=140)
