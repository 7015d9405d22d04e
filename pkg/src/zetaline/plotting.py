"""Figure rendering for verification reports and data series."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def render_report(report, path) -> None:
    """Log-scale bar chart of |diff| against tolerance + tail per check."""
    entries = report.entries
    if not entries:
        return
    labels = [r.check_id for r in entries]
    diffs = np.array([max(r.abs_diff, 1e-18) for r in entries])
    budget = np.array([max(r.tolerance + r.tail_estimate, 1e-18) for r in entries])
    colors = ["#2a9d3c" if r.passed else "#c62828" for r in entries]
    y = np.arange(len(entries))
    height = max(3.0, 0.28 * len(entries) + 1.2)
    fig, ax = plt.subplots(figsize=(10, height))
    ax.barh(y, diffs, color=colors, alpha=0.85, label="|lhs - rhs|")
    ax.plot(budget, y, "k|", markersize=9, label="tolerance + tail")
    ax.set_yticks(y)
    ax.set_yticklabels(labels, fontsize=7)
    ax.set_xscale("log")
    ax.set_xlabel("absolute difference")
    ax.invert_yaxis()
    ax.legend(loc="lower right", fontsize=8)
    ax.set_title("verification report")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_series(what: str, args, values, errs, path) -> None:
    args = np.asarray(args, dtype=float)
    values = np.asarray(values, dtype=float)
    errs = np.asarray(errs, dtype=float)
    fig, ax = plt.subplots(figsize=(9, 5))
    ax.plot(args, values, lw=1.0, color="#1f4e8c")
    if np.any(errs > 0):
        ax.fill_between(args, values - errs, values + errs,
                        color="#1f4e8c", alpha=0.25, linewidth=0)
    ax.set_xlabel("argument")
    ax.set_ylabel(what)
    ax.set_title(f"series: {what}")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
