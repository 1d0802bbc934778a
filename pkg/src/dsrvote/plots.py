"""Figure rendering for score reports."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_score_figure(table, directory, stem="scores"):
    """Render the score totals as a bar chart; returns the file path."""
    os.makedirs(directory, exist_ok=True)
    labels = list(table.alts.names)
    values = [float(t) for t in table.totals]
    fig, ax = plt.subplots(figsize=(max(4, 0.8 * len(labels)), 3.2))
    ax.bar(labels, values, color="#4878a8")
    ax.set_ylabel("total score")
    ax.set_title("DSR scores")
    fig.tight_layout()
    path = os.path.join(directory, f"{stem}.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
