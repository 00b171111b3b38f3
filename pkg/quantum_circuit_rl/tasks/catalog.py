"""The benchmark tasks.

Targets are built by composing each task's documented solution circuit.
"""

from __future__ import annotations

from functools import lru_cache
from os import getenv
from typing import TYPE_CHECKING, NamedTuple

from quantum_circuit_rl.common.exceptions import ConfigurationError
from quantum_circuit_rl.gatealg import apply, basis_state, circuit_unitary
from quantum_circuit_rl.models import (
    CatalogEntry,
    ExpertTrajectory,
    GatePlacement,
    Representation,
    RewardMode,
    TaskSpec,
)
from quantum_circuit_rl.tasks import action_sets as sets
from quantum_circuit_rl.tasks.space import space_size

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from quantum_circuit_rl.models import ActionSpec
    from quantum_circuit_rl.tasks.action_sets import ActionLabels

TASK_NAMES = (
    "bell_phi_plus",
    "bell_phi_minus",
    "bell_psi_plus",
    "bell_psi_minus",
    "swap",
    "iswap",
    "cz",
    "ghz",
    "z3",
    "toffoli",
)
"""Task names in catalog order."""

TOFFOLI_EXPERT = ("H0", "CP10", "CNOT21", "CP10^-1", "CNOT21", "CP20", "H0")


class _Definition(NamedTuple):
    description: str
    n_qubits: int
    solution: tuple[str, ...]
    matrix: ActionLabels
    tn: ActionLabels | None
    tn_reward: RewardMode
    gate_set: tuple[str, ...]


_DEFINITIONS: dict[str, _Definition] = {
    "bell_phi_plus": _Definition(
        "Bell state (|00> + |11>)/sqrt(2)",
        2,
        ("H0", "CNOT01"),
        sets.TWO_QUBIT_GATES,
        sets.TN_BELL,
        RewardMode.STATE_OVERLAP,
        ("H", "CNOT", "T"),
    ),
    "bell_phi_minus": _Definition(
        "Bell state (|00> - |11>)/sqrt(2)",
        2,
        ("X0", "H0", "CNOT01"),
        sets.BELL_X,
        sets.TN_BELL,
        RewardMode.STATE_OVERLAP,
        ("H", "CNOT", "T", "X"),
    ),
    "bell_psi_plus": _Definition(
        "Bell state (|01> + |10>)/sqrt(2)",
        2,
        ("H0", "X1", "CNOT01"),
        sets.BELL_X,
        sets.TN_BELL,
        RewardMode.STATE_OVERLAP,
        ("H", "CNOT", "T", "X"),
    ),
    "bell_psi_minus": _Definition(
        "Bell state (|01> - |10>)/sqrt(2)",
        2,
        ("H0", "X1", "Z0", "Z1", "CNOT01"),
        sets.BELL_XZ,
        sets.TN_BELL,
        RewardMode.STATE_OVERLAP,
        ("H", "CNOT", "T", "X", "Z"),
    ),
    "swap": _Definition(
        "SWAP gate from three alternating CNOTs",
        2,
        ("CNOT10", "CNOT01", "CNOT10"),
        sets.TWO_QUBIT_GATES,
        sets.TN_TWO_QUBIT_GATES,
        RewardMode.UNITARY_TRACE,
        ("H", "CNOT", "T"),
    ),
    "iswap": _Definition(
        "iSWAP gate; T*T = S provides the phase",
        2,
        ("CNOT01", "T1", "T1", "CNOT10", "CNOT01"),
        sets.TWO_QUBIT_GATES,
        sets.TN_TWO_QUBIT_GATES,
        RewardMode.UNITARY_TRACE,
        ("H", "CNOT", "T"),
    ),
    "cz": _Definition(
        "Controlled-Z gate from a CNOT conjugated by Hadamards",
        2,
        ("H0", "CNOT10", "H0"),
        sets.TWO_QUBIT_GATES,
        sets.TN_TWO_QUBIT_GATES,
        RewardMode.UNITARY_TRACE,
        ("H", "CNOT", "T"),
    ),
    "ghz": _Definition(
        "GHZ state (|000> + |111>)/sqrt(2)",
        3,
        ("H0", "CNOT01", "CNOT12"),
        sets.GHZ,
        sets.TN_THREE_QUBITS,
        RewardMode.STATE_OVERLAP,
        ("H", "CNOT", "T"),
    ),
    "z3": _Definition(
        "Z gate on qubit 0 of a 3-qubit register, as S*S",
        3,
        ("S0", "S0"),
        sets.Z_THREE_QUBITS,
        sets.TN_THREE_QUBITS,
        RewardMode.UNITARY_TRACE,
        ("H", "CNOT", "T", "S"),
    ),
    "toffoli": _Definition(
        "Toffoli gate (controls 1 and 2, target 0) from Hadamards, CNOTs and CPs",
        3,
        TOFFOLI_EXPERT,
        sets.TOFFOLI,
        None,
        RewardMode.UNITARY_TRACE,
        ("H", "CNOT", "CP"),
    ),
}


def build_task(name: str) -> TaskSpec:
    """Construct task `name` from scratch with the current gate definitions.

    Raises:
        ConfigurationError: If the task is unknown.

    """
    if name not in _DEFINITIONS:
        raise ConfigurationError(
            f"Unknown task {name!r}. Known tasks: {', '.join(TASK_NAMES)}"
        )
    definition = _DEFINITIONS[name]
    n_qubits = definition.n_qubits
    solution = tuple(GatePlacement.parse(_) for _ in definition.solution)
    target_unitary = circuit_unitary(solution, n_qubits)
    target_unitary.setflags(write=False)
    target_state = apply(target_unitary, basis_state(n_qubits))
    target_state.setflags(write=False)

    matrix_actions = sets.build_actions(definition.matrix)
    action_sets: dict[Representation, tuple[ActionSpec, ...]] = {
        Representation.MATRIX: matrix_actions,
        Representation.REVERSE: sets.inverted_actions(matrix_actions),
    }
    if definition.tn is not None:
        action_sets[Representation.TN] = sets.build_actions(definition.tn)

    walkthrough_sets: dict[Representation, tuple[ActionSpec, ...]] = {}
    if name == "bell_phi_plus":
        walkthrough = sets.build_actions(sets.WALKTHROUGH_MATRIX)
        walkthrough_sets = {
            Representation.MATRIX: walkthrough,
            Representation.REVERSE: sets.inverted_actions(walkthrough),
            Representation.TN: sets.build_actions(sets.WALKTHROUGH_TN),
        }

    expert = None
    if name == "toffoli":
        expert = ExpertTrajectory(actions=sets.build_actions(TOFFOLI_EXPERT))

    return TaskSpec(
        name=name,
        description=definition.description,
        n_qubits=n_qubits,
        target_unitary=target_unitary,
        target_state=target_state,
        solution=solution,
        action_sets=action_sets,
        walkthrough_action_sets=walkthrough_sets,
        gate_set=definition.gate_set,
        tn_reward_mode=definition.tn_reward,
        expert=expert,
    )


@lru_cache(maxsize=len(TASK_NAMES))
def get_task(name: str) -> TaskSpec:
    """Return the fully populated task `name` (cached).

    Raises:
        ConfigurationError: If the task is unknown.

    """
    return build_task(name)


def action_set(
    task: TaskSpec, representation: Representation, walkthrough: bool = False
) -> tuple[ActionSpec, ...]:
    """Actions of `task` under `representation`.

    Parameters:
        task: The task.
        representation: The MDP representation.
        walkthrough: Use the small demonstration set (Bell state only).

    Raises:
        ConfigurationError: If the combination is undefined, e.g., Toffoli in the
            tensor-network representation.

    """
    available = task.walkthrough_action_sets if walkthrough else task.action_sets
    if representation not in available:
        kind = "walkthrough " if walkthrough else ""
        raise ConfigurationError(
            f"No {kind}{representation.value} action set is defined for task "
            f"{task.name!r}"
        )
    return available[representation]


def expert_trajectory(
    task: TaskSpec, representation: Representation
) -> ExpertTrajectory | None:
    """The expert trajectory of `task` in `representation`, if there is one.

    The reverse representation uses the reversed sequence of inverted actions.
    """
    if task.expert is None or representation is Representation.TN:
        return None
    if representation is Representation.REVERSE:
        return ExpertTrajectory(
            actions=tuple(_.inverted() for _ in reversed(task.expert.actions)),
            repeat_count=task.expert.repeat_count,
        )
    return task.expert


def task_catalog() -> list[CatalogEntry]:
    """One row per task: qubits, matrix action count, length, space size, gate set."""
    rows = []
    for name in TASK_NAMES:
        task = get_task(name)
        n_actions = len(task.action_sets[Representation.MATRIX])
        rows.append(
            CatalogEntry(
                name=name,
                qubits=task.n_qubits,
                actions=n_actions,
                length=task.solution_length,
                space_size=space_size(n_actions, task.solution_length).bound,
                gate_set=list(task.gate_set),
            )
        )
    return rows
