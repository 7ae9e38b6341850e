"""Artifact writers: canonical JSON, CSV tables, DOT graphs, and charts.

Every writer is deterministic byte for byte for a fixed input: JSON is
emitted with sorted keys and fixed separators, CSV rows are sorted, and
figures are rendered on the Agg backend with pinned metadata so repeated
runs produce identical files.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Optional

from . import __version__

_FIG_METADATA = {"Software": f"bgres {__version__}"}


def canonical_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def report_payload(config: dict, reports: Iterable, tables: Optional[dict] = None) -> dict:
    reports = list(reports)
    payload = {
        "tool_version": __version__,
        "config": config,
        "checked": sum(r.checked for r in reports),
        "passed": all(r.passed for r in reports),
        "failures": [f for r in reports for f in r.failures],
    }
    if tables is not None:
        payload["tables"] = tables
    return payload


def csv_table(header: list[str], rows: Iterable[Iterable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in sorted(rows):
        writer.writerow(list(row))
    return buf.getvalue()


def ext_table_csv(table) -> str:
    return csv_table(["s", "n", "t", "dim"], table.rows())


def ext_table_json(table) -> dict:
    return {
        "cells": [
            {"s": s, "n": n, "t": t, "dim": dim} for (s, n, t, dim) in table.rows()
        ]
    }


def homology_csv(dims: dict[tuple[int, int], int]) -> str:
    return csv_table(["r", "s", "dim"], [(r, s, v) for (r, s), v in dims.items()])


def series_json(series) -> dict:
    return {"flavor": series.flavor, "coefficients": series.to_json_dict()}


# ---------------------------------------------------------------------------
# Charts


def _figure():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_ext_chart(table, n_values: list[int], path: Path) -> None:
    """Dot charts in (stem, filtration) coordinates, one panel per source
    sphere; multiplicity is printed next to a dot when it exceeds one."""
    plt = _figure()
    n_values = sorted(set(n_values))[:6]
    cols = min(len(n_values), 3) or 1
    rows_n = (len(n_values) + cols - 1) // cols
    fig, axes = plt.subplots(
        rows_n, cols, figsize=(4.2 * cols, 3.4 * rows_n), squeeze=False
    )
    for panel, n in enumerate(n_values):
        ax = axes[panel // cols][panel % cols]
        xs, ys, labels = [], [], []
        for (s, src, t), dim in sorted(table.entries.items()):
            if src != n:
                continue
            xs.append(t - s)
            ys.append(s)
            labels.append(dim)
        ax.scatter(xs, ys, s=18, c="black")
        for x, y, dim in zip(xs, ys, labels):
            if dim > 1:
                ax.annotate(str(dim), (x, y), textcoords="offset points", xytext=(4, 2), fontsize=7)
        ax.set_title(f"source sphere n={n}", fontsize=9)
        ax.set_xlabel("t - s")
        ax.set_ylabel("s")
        ax.grid(True, linewidth=0.3, alpha=0.5)
        ax.set_axisbelow(True)
    for panel in range(len(n_values), rows_n * cols):
        axes[panel // cols][panel % cols].axis("off")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, metadata=_FIG_METADATA)
    plt.close(fig)


def save_homology_chart(dims: dict[tuple[int, int], int], path: Path, title: str) -> None:
    plt = _figure()
    fig, ax = plt.subplots(figsize=(6.5, 4.0))
    xs = [s - r for (r, s) in sorted(dims)]
    ys = [r for (r, s) in sorted(dims)]
    ax.scatter(xs, ys, s=20, c="black")
    for (r, s), dim in sorted(dims.items()):
        if dim > 1:
            ax.annotate(str(dim), (s - r, r), textcoords="offset points", xytext=(4, 2), fontsize=7)
    ax.set_xlabel("s - r")
    ax.set_ylabel("r")
    ax.set_title(title, fontsize=10)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    ax.set_axisbelow(True)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, metadata=_FIG_METADATA)
    plt.close(fig)


def save_bar_chart(values: dict[int, int], path: Path, title: str, xlabel: str) -> None:
    plt = _figure()
    fig, ax = plt.subplots(figsize=(6.0, 3.2))
    keys = sorted(values)
    ax.bar(keys, [values[k] for k in keys], color="black", width=0.6)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("dim")
    ax.set_title(title, fontsize=10)
    ax.set_xticks(keys)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, metadata=_FIG_METADATA)
    plt.close(fig)
