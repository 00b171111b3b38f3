"""Tests for bench/report.py"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from pathlib import Path

    from quantum_circuit_rl.models import BenchReport


def _report(
    task: str, algorithm: str, successes: int, rounds: int, **values: object
) -> BenchReport:
    from quantum_circuit_rl.models import BenchReport

    return BenchReport(
        task=task,
        algorithm=algorithm,
        rounds=rounds,
        successes=successes,
        ratio=100.0 * successes / rounds if rounds else 0.0,
        config={},
        seed=0,
        **values,
    )


def test_ratio_must_match_counts() -> None:
    """The stored ratio is validated against the counts"""
    from pydantic import ValidationError

    from quantum_circuit_rl.models import BenchReport

    with pytest.raises(ValidationError, match="ratio should be"):
        BenchReport(
            task="cz", algorithm="qlearn", rounds=4, successes=1, ratio=20.0,
            config={}, seed=0,
        )  # fmt: skip
    with pytest.raises(ValidationError, match="cannot exceed"):
        BenchReport(
            task="cz", algorithm="qlearn", rounds=1, successes=2, ratio=100.0,
            config={}, seed=0,
        )  # fmt: skip


@pytest.mark.parametrize(
    ("successes", "rounds", "cell"),
    [(86, 100, "86% (86/100)"), (2, 3, "66.67% (2/3)"), (0, 0, "0% (0/0)")],
)
def test_format_cell(successes: int, rounds: int, cell: str) -> None:
    """Ratio followed by the counts"""
    from quantum_circuit_rl.bench import format_cell

    assert format_cell(_report("cz", "qlearn", successes, rounds)) == cell


def test_format_incomplete_cell() -> None:
    """Cells with failed rounds are marked"""
    from quantum_circuit_rl.bench import format_cell

    report = _report("cz", "qlearn", 1, 1, failed_rounds=[1], errors=["boom"])
    assert format_cell(report) == "100% (1/1)*"


def test_cell_defined() -> None:
    """Only Toffoli lacks a tensor-network set"""
    from quantum_circuit_rl.bench import cell_defined
    from quantum_circuit_rl.models import Algorithm
    from quantum_circuit_rl.tasks import TASK_NAMES

    undefined = [
        (task, algorithm)
        for task in TASK_NAMES
        for algorithm in Algorithm
        if not cell_defined(task, algorithm)
    ]
    assert undefined == [("toffoli", Algorithm.QLEARN_TN)]


def test_render_table() -> None:
    """Rows in catalog order; undefined cells read `-`, missing ones are blank"""
    from quantum_circuit_rl.bench import render_table

    table = render_table(
        [
            _report("toffoli", "qlearn", 87, 100),
            _report("bell_phi_plus", "qlearn_tn", 100, 100),
            _report("bell_phi_plus", "qlearn", 86, 100),
        ]
    )
    lines = table.splitlines()

    assert [_.strip() for _ in lines[0].split("|")] == [
        "Task",
        "Q-Learning",
        "Q-Learning (Rev)",
        "DQN",
        "DQN (Rev)",
        "Q-Learning (TN)",
    ]
    assert set(lines[1]) <= {"-", "+"}
    assert len(lines) == 4

    bell = [_.strip() for _ in lines[2].split("|")]
    assert bell == ["bell_phi_plus", "86% (86/100)", "", "", "", "100% (100/100)"]
    toffoli = [_.strip() for _ in lines[3].split("|")]
    assert toffoli == ["toffoli", "87% (87/100)", "", "", "", "-"]


def test_render_table_footnote() -> None:
    """A footnote explains the mark of incomplete cells"""
    from quantum_circuit_rl.bench import render_table

    table = render_table([_report("cz", "dqn", 0, 2, failed_rounds=[2])])
    assert "0% (0/2)*" in table
    assert table.splitlines()[-1].startswith("* some rounds failed")


def test_write_reports(tmp_path: Path) -> None:
    """The JSON report holds one record per cell next to the rendered table"""
    import json

    from quantum_circuit_rl.bench import render_table, write_reports

    reports = [_report("cz", "qlearn", 3, 4), _report("cz", "dqn", 1, 4)]
    paths = write_reports(reports, tmp_path / "bench")

    records = json.loads(paths["report"].read_text())
    assert [_["algorithm"] for _ in records] == ["qlearn", "dqn"]
    assert records[0]["ratio"] == 75.0
    assert paths["table"].read_text() == render_table(reports) + "\n"
