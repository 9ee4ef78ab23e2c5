"""Figures for survey reports (written to files, never shown)."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 9,
    "ytick.labelsize": 9,
    "figure.figsize": (5.0, 3.2),
    "axes.spines.top": False,
    "axes.spines.right": False,
}

SERIES = {
    1: [("rep_edge", "contain rep. edge"), ("rep_vertex", "contain rep. vertex")],
    2: [("rep_edge", "contain rep. edge"), ("rep_vertex", "contain rep. vertex")],
    3: [("nus3c", "NUS3C"), ("constructed", "constructed")],
}
BASE = {1: ("total", "all cubic"), 2: ("nus3", "NUS3"), 3: ("nus3", "NUS3")}


def plot_reports(reports, path) -> None:
    """Share of each census column against order, one line per column."""
    reports = sorted(reports, key=lambda r: r.order)
    table = reports[0].table
    base_key, base_label = BASE[table]
    orders = [r.order for r in reports]
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        for key, label in SERIES[table]:
            ys = [
                100.0 * r.counts[key] / r.counts[base_key] if r.counts[base_key] else float("nan")
                for r in reports
            ]
            ax.plot(orders, ys, marker="o", label=label)
        ax.set_xlabel("order N")
        ax.set_ylabel(f"% of {base_label} graphs")
        ax.set_xticks(orders)
        ax.set_title(f"Table {table}")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)


def plot_ratio(orders, ratios, path) -> None:
    """Constructed / NUS3 against order; missing ratios are skipped."""
    pts = [(n, float(r)) for n, r in zip(orders, ratios) if r is not None]
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        if pts:
            xs, ys = zip(*pts)
            ax.plot(xs, ys, marker="s", color="k")
            ax.set_xticks(list(xs))
        ax.axhline(1.0, ls=":", lw=0.8, color="grey")
        ax.set_ylim(0, 1.05)
        ax.set_xlabel("order N")
        ax.set_ylabel("|constructed| / |NUS3|")
        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
