"""Matplotlib rendering of convergence curves for the report path."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evolution import RunResult
from .stats import ConvergenceRow


def render_convergence(
    results: Sequence[RunResult],
    rows: Sequence[ConvergenceRow],
    path,
    max_fitness: int | None = None,
) -> None:
    """Write a PNG of per-run best-fitness curves with the batch envelope."""
    fig, ax = plt.subplots(figsize=(8, 5))
    generations = [row.generation for row in rows]
    for result in results:
        ax.plot(
            generations,
            [rec.best for rec in result.trace],
            color="steelblue",
            alpha=0.35,
            linewidth=0.8,
        )
    ax.fill_between(
        generations,
        [row.best_min for row in rows],
        [row.best_max for row in rows],
        color="steelblue",
        alpha=0.15,
        label="best min..max",
    )
    ax.plot(
        generations,
        [row.best_mean for row in rows],
        color="darkblue",
        linewidth=2.0,
        label="best (mean over runs)",
    )
    if max_fitness is not None:
        ax.axhline(max_fitness, color="firebrick", linestyle="--", linewidth=1.0,
                   label="corpus type characters")
    ax.set_xlabel("generation")
    ax.set_ylabel("fitness")
    ax.set_title(f"Best fitness over {len(results)} runs")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
