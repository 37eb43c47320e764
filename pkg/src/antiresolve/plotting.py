"""Figures written next to the JSON reports."""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .antiresolving import Flavor, iter_partitions  # noqa: E402
from .graph import Graph  # noqa: E402

# Strip the version stamp so identical inputs give identical files.
_PNG_META = {"Software": None}


def _save(fig, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    plt.close(fig)


def plot_degree_shift(g: Graph, g2: Graph, path, k: int | None = None, title: str = "") -> None:
    """Per-vertex degree before and after a transformation."""
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ids = list(range(g.n))
    ax.plot(ids, g.degrees(), "o", color="0.55", label="original", ms=5)
    ax.plot(ids, g2.degrees(), "x", color="C3", label="transformed", ms=6)
    if k is not None:
        ax.axhspan(k, g.n - k - 1, color="C0", alpha=0.08, lw=0)
        ax.axhline(k, color="C0", lw=0.8, ls="--")
        ax.axhline(g.n - k - 1, color="C0", lw=0.8, ls="--")
    ax.set_xlabel("vertex id")
    ax.set_ylabel("degree")
    if title:
        ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    _save(fig, path)


def plot_antiresolving_values(g: Graph, ell: int, path, flavor=Flavor.ADJACENCY) -> Counter:
    """Histogram of antiresolving values over every probe set of size <= ell."""
    counts: Counter = Counter()
    for size in range(1, ell + 1):
        for _, classes in iter_partitions(g, size, flavor):
            counts[(size, min(c.bit_count() for c in classes))] += 1
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ks = sorted({k for _, k in counts})
    width = 0.8 / ell
    for size in range(1, ell + 1):
        xs = [k + (size - 1) * width for k in ks]
        ax.bar(xs, [counts.get((size, k), 0) for k in ks], width=width, label=f"|S|={size}")
    ax.set_xticks([k + 0.4 - width / 2 for k in ks])
    ax.set_xticklabels([str(k) for k in ks])
    ax.set_xlabel("antiresolving value k")
    ax.set_ylabel("probe sets")
    ax.set_yscale("log")
    ax.legend(frameon=False, fontsize=8)
    _save(fig, path)
    return counts
