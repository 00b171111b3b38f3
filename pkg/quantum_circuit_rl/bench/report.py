"""Rendering and persistence of benchmark reports."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

from quantum_circuit_rl.common.logger import LOGGER
from quantum_circuit_rl.common.utils import write_json
from quantum_circuit_rl.models import Algorithm
from quantum_circuit_rl.tasks import TASK_NAMES, get_task

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Iterable
    from pathlib import Path

    from quantum_circuit_rl.models import BenchReport

INCOMPLETE_MARK = "*"


def cell_defined(task: str, algorithm: Algorithm) -> bool:
    """Whether `algorithm` can be run on `task` at all."""
    return algorithm.representation in get_task(task).action_sets


def format_cell(report: BenchReport) -> str:
    """E.g. `86% (86/100)`; reports with failed rounds are marked."""
    cell = f"{report.ratio:.4g}% ({report.successes}/{report.rounds})"
    return cell if report.complete else cell + INCOMPLETE_MARK


def render_table(reports: Iterable[BenchReport]) -> str:
    """Success ratios with one row per task and one column per algorithm.

    Undefined combinations read `-`. Rows are limited to the tasks present in
    `reports`, in catalog order.
    """
    cells = {(_.task, _.algorithm): _ for _ in reports}
    tasks = [name for name in TASK_NAMES if any(_[0] == name for _ in cells)]

    header = ["Task", *(algorithm.title for algorithm in Algorithm)]
    rows = []
    for task in tasks:
        row = [task]
        for algorithm in Algorithm:
            if (task, algorithm) in cells:
                row.append(format_cell(cells[task, algorithm]))
            else:
                row.append("" if cell_defined(task, algorithm) else "-")
        rows.append(row)

    lines = [header, *rows]
    widths = [max(len(line[col]) for line in lines) for col in range(len(header))]
    rendered = [
        " | ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in lines
    ]
    rendered.insert(1, "-+-".join("-" * width for width in widths))
    if not all(_.complete for _ in cells.values()):
        rendered.append(f"{INCOMPLETE_MARK} some rounds failed; see the JSON report")
    return "\n".join(rendered)


def write_reports(reports: list[BenchReport], out_dir: Path) -> dict[str, Path]:
    """Write `report.json` (one record per cell) and the rendered `report.txt`.

    Returns:
        The written paths by artifact kind.

    """
    json_path = write_json(out_dir / "report.json", reports)
    text_path = out_dir / "report.txt"
    text_path.write_text(render_table(reports) + "\n", encoding="utf8")
    LOGGER.info("Wrote %s", text_path)
    return {"report": json_path, "table": text_path}
