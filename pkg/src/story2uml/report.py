"""Evaluation report rendering: delimited files plus matplotlib figures.

Used by the CLI's evaluate path when a report directory is given; the
figures land next to the CSV so a run leaves one self-contained folder.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .classifier import ConfusionMatrix, Metrics
from .project import ExtractionReport


def write_extraction_csv(report: ExtractionReport, path: Path | str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["category", "actual", "identified", "pct"])
        writer.writerow(["actors", report.actual_actors,
                         report.identified_actors, f"{report.actor_pct:.2f}"])
        writer.writerow(["use_cases", report.actual_use_cases,
                         report.identified_use_cases, f"{report.use_case_pct:.2f}"])


def plot_extraction_report(report: ExtractionReport, path: Path | str) -> None:
    """Grouped bar chart of actual vs. identified counts."""
    categories = ["actors", "use cases"]
    actual = [report.actual_actors, report.actual_use_cases]
    identified = [report.identified_actors, report.identified_use_cases]
    x = range(len(categories))
    fig, ax = plt.subplots(figsize=(5, 3.2))
    width = 0.35
    ax.bar([i - width / 2 for i in x], actual, width, label="actual", color="#888888")
    ax.bar([i + width / 2 for i in x], identified, width, label="identified", color="#3b7dd8")
    for i, (a, ident) in enumerate(zip(actual, identified)):
        pct = 100.0 * ident / a if a else 0.0
        ax.text(i + width / 2, ident, f"{pct:.1f}%", ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(x))
    ax.set_xticklabels(categories)
    ax.set_ylabel("count")
    ax.set_title(f"Extraction over {report.story_count} stories")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_metrics_csv(cm: ConfusionMatrix, metrics: Metrics, path: Path | str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["tp", "fp", "fn", "tn", "accuracy", "precision", "recall", "f1"])
        writer.writerow([cm.tp, cm.fp, cm.fn, cm.tn,
                         f"{metrics.accuracy:.4f}", f"{metrics.precision:.4f}",
                         f"{metrics.recall:.4f}", f"{metrics.f1:.4f}"])


def plot_confusion_matrix(cm: ConfusionMatrix, path: Path | str) -> None:
    """2x2 heatmap with count annotations."""
    grid = [[cm.tp, cm.fn], [cm.fp, cm.tn]]
    fig, ax = plt.subplots(figsize=(3.6, 3.2))
    image = ax.imshow(grid, cmap="Blues")
    labels = [["TP", "FN"], ["FP", "TN"]]
    peak = max(max(row) for row in grid) or 1
    for r in range(2):
        for c in range(2):
            color = "white" if grid[r][c] > peak / 2 else "black"
            ax.text(c, r, f"{labels[r][c]}\n{grid[r][c]}", ha="center",
                    va="center", color=color)
    ax.set_xticks([0, 1])
    ax.set_xticklabels(["kept", "dropped"])
    ax.set_yticks([0, 1])
    ax.set_yticklabels(["genuine", "noise"])
    ax.set_xlabel("predicted")
    ax.set_ylabel("actual")
    ax.set_title("Classifier confusion matrix")
    fig.colorbar(image, ax=ax, fraction=0.046)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report_dir(directory: Path | str, report: ExtractionReport,
                      cm: ConfusionMatrix | None = None,
                      metrics: Metrics | None = None) -> list[Path]:
    """Write every artifact for one evaluation run; returns written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    csv_path = directory / "extraction_report.csv"
    write_extraction_csv(report, csv_path)
    written.append(csv_path)
    fig_path = directory / "extraction_report.png"
    plot_extraction_report(report, fig_path)
    written.append(fig_path)
    if cm is not None and metrics is not None:
        metrics_path = directory / "ml_metrics.csv"
        write_metrics_csv(cm, metrics, metrics_path)
        written.append(metrics_path)
        cm_path = directory / "confusion_matrix.png"
        plot_confusion_matrix(cm, cm_path)
        written.append(cm_path)
    return written
