"""Tests for tasks/catalog.py and tasks/space.py"""

from __future__ import annotations

import pytest

SPACE_SIZES = [
    ("bell_phi_plus", 6, 2, 43),
    ("bell_phi_minus", 6, 3, 259),
    ("bell_psi_plus", 6, 3, 259),
    ("bell_psi_minus", 8, 5, 37449),
    ("swap", 6, 3, 259),
    ("iswap", 6, 5, 9331),
    ("cz", 6, 3, 259),
    ("ghz", 8, 3, 585),
    ("z3", 10, 2, 111),
    ("toffoli", 5, 7, 97656),
]


@pytest.mark.parametrize(("name", "actions", "length", "size"), SPACE_SIZES)
def test_catalog_rows(name: str, actions: int, length: int, size: int) -> None:
    """Action counts, solution lengths and tree sizes of every task"""
    from quantum_circuit_rl.tasks import space_size, task_catalog

    entry = next(_ for _ in task_catalog() if _.name == name)
    assert (entry.actions, entry.length, entry.space_size) == (actions, length, size)
    assert space_size(actions, length).bound == size


def test_catalog_order() -> None:
    """The catalog lists every task once, in catalog order"""
    from quantum_circuit_rl.tasks import TASK_NAMES, task_catalog

    assert [_.name for _ in task_catalog()] == list(TASK_NAMES)
    assert len(TASK_NAMES) == 10


def test_space_size_errors() -> None:
    """Degenerate trees and bounds beyond 64-bit indices are rejected"""
    from pydantic import ValidationError

    from quantum_circuit_rl.common.exceptions import ConfigurationError
    from quantum_circuit_rl.models import SpaceSizeReport
    from quantum_circuit_rl.tasks import space_size

    assert space_size(2, 0).bound == 1
    with pytest.raises(ConfigurationError):
        space_size(1, 3)
    with pytest.raises(ConfigurationError):
        space_size(3, -1)
    with pytest.raises(ConfigurationError, match="64-bit"):
        space_size(20, 20)
    with pytest.raises(ValidationError, match="bound should be"):
        SpaceSizeReport(branching=2, depth=2, bound=8)


@pytest.mark.parametrize(
    ("name", "size"),
    [("bell_phi_plus", 20), ("swap", 20), ("ghz", 45), ("z3", 45)],
)
def test_tn_action_sets(name: str, size: int) -> None:
    """Tensor-network sets mix single gates and two-gate composites"""
    from quantum_circuit_rl.models import Representation
    from quantum_circuit_rl.tasks import action_set, get_task

    actions = action_set(get_task(name), Representation.TN)
    assert len(actions) == size
    assert len({_.label for _ in actions}) == size
    assert any(_.second is not None for _ in actions)


def test_walkthrough_action_sets() -> None:
    """Only the Bell task has the small demonstration sets"""
    from quantum_circuit_rl.common.exceptions import ConfigurationError
    from quantum_circuit_rl.models import Representation
    from quantum_circuit_rl.tasks import action_set, get_task

    bell = get_task("bell_phi_plus")
    matrix = action_set(bell, Representation.MATRIX, walkthrough=True)
    assert [_.label for _ in matrix] == ["H0", "H1", "T0", "T1", "CNOT01"]
    reverse = action_set(bell, Representation.REVERSE, walkthrough=True)
    assert [_.label for _ in reverse] == [
        "H0^-1",
        "H1^-1",
        "T0^-1",
        "T1^-1",
        "CNOT01^-1",
    ]
    assert len(action_set(bell, Representation.TN, walkthrough=True)) == 17

    with pytest.raises(ConfigurationError, match="walkthrough"):
        action_set(get_task("cz"), Representation.MATRIX, walkthrough=True)


def test_toffoli_has_no_tn_set() -> None:
    """Toffoli is undefined in the tensor-network representation"""
    from quantum_circuit_rl.common.exceptions import ConfigurationError
    from quantum_circuit_rl.models import Representation
    from quantum_circuit_rl.tasks import action_set, get_task

    with pytest.raises(ConfigurationError, match="No tn action set"):
        action_set(get_task("toffoli"), Representation.TN)


def test_expert_trajectories() -> None:
    """The reverse expert undoes the matrix expert from the last gate"""
    from quantum_circuit_rl.models import Representation
    from quantum_circuit_rl.tasks import expert_trajectory, get_task

    toffoli = get_task("toffoli")
    matrix = expert_trajectory(toffoli, Representation.MATRIX)
    reverse = expert_trajectory(toffoli, Representation.REVERSE)
    assert matrix is not None
    assert reverse is not None
    assert matrix.labels == [
        "H0", "CP10", "CNOT21", "CP10^-1", "CNOT21", "CP20", "H0",
    ]  # fmt: skip
    assert reverse.labels == [
        "H0^-1", "CP20^-1", "CNOT21^-1", "CP10", "CNOT21^-1", "CP10^-1", "H0^-1",
    ]  # fmt: skip
    assert reverse.repeat_count == matrix.repeat_count == 10

    assert expert_trajectory(toffoli, Representation.TN) is None
    assert expert_trajectory(get_task("swap"), Representation.MATRIX) is None


def test_targets() -> None:
    """Targets are read-only and the state target is the first unitary column"""
    import numpy as np

    from quantum_circuit_rl.tasks import get_task

    task = get_task("ghz")
    assert np.allclose(task.target_state, task.target_unitary[:, 0])
    assert np.allclose(abs(task.target_state[[0, 7]]), 1 / np.sqrt(2))
    with pytest.raises(ValueError):  # noqa: PT011
        task.target_unitary[0, 0] = 2
    assert get_task("ghz") is task


def test_unknown_task() -> None:
    """Unknown names list the known tasks"""
    from quantum_circuit_rl.common.exceptions import ConfigurationError
    from quantum_circuit_rl.tasks import get_task

    with pytest.raises(ConfigurationError, match="bell_phi_plus"):
        get_task("bell")
