"""Figure output for the report path of the CLI."""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "quiverpic"

import matplotlib.pyplot as plt  # noqa: E402  backend must be set first


def _deterministic_metadata(path: str) -> dict | None:
    # strip the self-dating fields the writers would otherwise embed
    if path.endswith(".svg"):
        return {"Date": None}
    if path.endswith(".png"):
        return {"Software": None}
    if path.endswith(".pdf"):
        return {"CreationDate": None}
    return None


def save_betti_plot(
    path: str, series: Mapping[str, Sequence[int]], title: str
) -> None:
    """One marker-line per labeled rank sequence, saved to path."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    width = 0
    for label, values in series.items():
        ax.plot(range(len(values)), values, marker="o", label=label or "linear")
        width = max(width, len(values))
    ax.set_xlabel("degree")
    ax.set_ylabel("rank")
    ax.set_title(title)
    ax.set_xticks(range(width))
    if 0 < len(series) <= 12:
        ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, metadata=_deterministic_metadata(str(path)))
    plt.close(fig)
