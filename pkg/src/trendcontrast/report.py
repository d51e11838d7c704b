"""Run-report rendering: a delimited summary plus matplotlib figures."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .miner import RunReport, TopKSet
from .model import format_pattern

_CSV_FIELDS = (
    "direction", "length", "group1", "group2", "examined",
    "pruned_s1", "pruned_s2", "pruned_s3", "dropped", "c_min",
)


def write_report_files(report: RunReport, topk: TopKSet, out_dir: str | Path) -> list[Path]:
    """Write report.csv and summary figures into ``out_dir``.

    Returns the list of files written. The CSV carries one row per candidate
    level plus a totals row; the figures chart candidates examined per level,
    pruning activity per strategy, and the contrasts of the mined set.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    csv_path = out_dir / "report.csv"
    with csv_path.open("w", newline="") as fp:
        writer = csv.writer(fp)
        writer.writerow(_CSV_FIELDS)
        for lv in report.levels:
            writer.writerow(
                [lv.direction, lv.length, lv.group1, lv.group2, lv.examined,
                 lv.pruned_s1, lv.pruned_s2, lv.pruned_s3, lv.dropped, f"{lv.c_min:.6f}"]
            )
        writer.writerow(
            ["total", report.peak_length, "", "", report.candidates_examined,
             sum(lv.pruned_s1 for lv in report.levels),
             sum(lv.pruned_s2 for lv in report.levels),
             sum(lv.pruned_s3 for lv in report.levels),
             sum(lv.dropped for lv in report.levels),
             f"{report.elapsed:.6f}"]
        )
    written.append(csv_path)

    labels = [f"{lv.direction[0].upper()}{lv.length}" for lv in report.levels]
    xs = range(len(report.levels))

    fig, ax = plt.subplots(figsize=(7, 4))
    colors = ["tab:blue" if lv.direction == "forward" else "tab:orange" for lv in report.levels]
    ax.bar(xs, [lv.examined for lv in report.levels], color=colors)
    ax.set_xticks(list(xs), labels)
    ax.set_xlabel("pass/level (F = forward, R = reverse)")
    ax.set_ylabel("candidates examined")
    ax.set_title("Candidates examined per level")
    fig.tight_layout()
    path = out_dir / "candidates_per_level.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(7, 4))
    bottoms = [0] * len(report.levels)
    for name, color in (("pruned_s1", "tab:red"), ("pruned_s2", "tab:purple"),
                        ("pruned_s3", "tab:green"), ("dropped", "tab:gray")):
        heights = [getattr(lv, name) for lv in report.levels]
        ax.bar(xs, heights, bottom=bottoms, label=name, color=color)
        bottoms = [b + h for b, h in zip(bottoms, heights)]
    ax.set_xticks(list(xs), labels)
    ax.set_xlabel("pass/level")
    ax.set_ylabel("candidates removed")
    ax.set_title("Pruned and dropped candidates per level")
    ax.legend()
    fig.tight_layout()
    path = out_dir / "pruning_per_level.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(7, max(2.5, 0.5 * max(1, len(topk)))))
    entries = list(topk)
    names = [format_pattern(e.pattern) for e in entries]
    values = [e.contrast for e in entries]
    colors = ["tab:blue" if e.direction == "forward" else "tab:orange" for e in entries]
    ax.barh(range(len(entries)), values, color=colors)
    ax.set_yticks(range(len(entries)), names)
    ax.invert_yaxis()
    ax.set_xlabel("contrast")
    ax.set_title("Mined top-k contrasts (blue = forward, orange = reverse)")
    fig.tight_layout()
    path = out_dir / "topk_contrasts.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    return written
