"""Circuit identity and consistency checks.

Every check rebuilds its circuits from the current gate definitions and compares
them with literal matrices and states, so a wrong gate definition is detected.
"""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

import numpy as np

from quantum_circuit_rl.common.exceptions import VerificationError
from quantum_circuit_rl.envs import CircuitEnv, circuit_from_trajectory
from quantum_circuit_rl.gatealg import (
    apply,
    base_gate_matrix,
    basis_state,
    circuit_unitary,
    is_normalized,
    is_unitary,
    n_qubits_of,
    state_overlap,
    trace_fidelity,
)
from quantum_circuit_rl.models import (
    ActionSpec,
    GatePlacement,
    IdentityCheck,
    Representation,
)
from quantum_circuit_rl.tasks.catalog import (
    TASK_NAMES,
    build_task,
    expert_trajectory,
)
from quantum_circuit_rl.tasks.space import space_size

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Sequence

_R = 1 / np.sqrt(2)

BELL_MATRIX = _R * np.array(
    [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [1, 0, -1, 0]], dtype=np.complex128
)
"""`CNOT01 (H x I)`, the circuit preparing `(|00> + |11>)/sqrt(2)`."""

TARGET_STATES: dict[str, np.ndarray] = {
    "bell_phi_plus": _R * np.array([1, 0, 0, 1], dtype=np.complex128),
    "bell_phi_minus": _R * np.array([1, 0, 0, -1], dtype=np.complex128),
    "bell_psi_plus": _R * np.array([0, 1, 1, 0], dtype=np.complex128),
    "bell_psi_minus": _R * np.array([0, 1, -1, 0], dtype=np.complex128),
    "ghz": _R * np.array([1, 0, 0, 0, 0, 0, 0, 1], dtype=np.complex128),
}

TOFFOLI_MATRIX = np.eye(8, dtype=np.complex128)[[0, 1, 2, 7, 4, 5, 6, 3]]
"""Flips qubit 0 iff qubits 1 and 2 are set: swaps `|011>` and `|111>`."""

TARGET_UNITARIES: dict[str, np.ndarray] = {
    "swap": np.eye(4, dtype=np.complex128)[[0, 2, 1, 3]],
    "iswap": np.array(
        [[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
    ),
    "cz": np.diag([1, 1, 1, -1]).astype(np.complex128),
    "z3": np.diag([1, 1, 1, 1, -1, -1, -1, -1]).astype(np.complex128),
    "toffoli": TOFFOLI_MATRIX,
}

SPACE_SIZES = {
    "bell_phi_plus": 43,
    "bell_phi_minus": 259,
    "bell_psi_plus": 259,
    "bell_psi_minus": 37449,
    "swap": 259,
    "iswap": 9331,
    "cz": 259,
    "ghz": 585,
    "z3": 111,
    "toffoli": 97656,
}

ISWAP_ALTERNATIVE = ("S0", "S1", "H0", "CNOT01", "CNOT10", "H1")
"""Two-CNOT iSWAP circuit, equal to the task's five-gate circuit up to phase."""


def corrupted_gate_matrix(name: str, phase: float = 0.3) -> np.ndarray:
    """Gate `name` followed by a phase of `phase` on its last basis state.

    Raises:
        ConfigurationError: For an unknown gate.

    """
    matrix = base_gate_matrix(name)
    matrix[:, -1] *= np.exp(1j * phase)
    return matrix


def _circuit(labels: Sequence[str], n_qubits: int) -> np.ndarray:
    return circuit_unitary([GatePlacement.parse(_) for _ in labels], n_qubits)


def _check(name: str, value: float, passed: bool, detail: str = "") -> IdentityCheck:
    return IdentityCheck(name=name, passed=passed, value=value, detail=detail)


def check_bell_matrix() -> IdentityCheck:
    """`[H0, CNOT01]` equals the Bell preparation matrix entrywise."""
    deviation = float(np.max(np.abs(_circuit(["H0", "CNOT01"], 2) - BELL_MATRIX)))
    return _check(
        "bell_matrix_entrywise", deviation, deviation < 1e-12, "max |entry deviation|"
    )


def check_targets() -> list[IdentityCheck]:
    """Targets are unitary, normalized and sized to their register."""
    checks = []
    for name in TASK_NAMES:
        task = build_task(name)
        unitary, state = task.target_unitary, task.target_state
        passed = (
            is_unitary(unitary)
            and is_normalized(state)
            and n_qubits_of(unitary) == n_qubits_of(state) == task.n_qubits
        )
        checks.append(
            _check(
                f"{name}_target_consistent",
                float(np.linalg.norm(state)),
                passed,
                f"{task.n_qubits}-qubit target; value is the state norm",
            )
        )
    return checks


def check_solutions(tol: float) -> list[IdentityCheck]:
    """Every task's solution circuit against its literal target."""
    checks = []
    for name in TASK_NAMES:
        task = build_task(name)
        unitary = circuit_unitary(task.solution, task.n_qubits)
        if name in TARGET_STATES:
            value = state_overlap(
                apply(unitary, basis_state(task.n_qubits)), TARGET_STATES[name]
            )
            detail = "state overlap"
        else:
            value = trace_fidelity(unitary, TARGET_UNITARIES[name])
            detail = "trace fidelity"
        checks.append(
            _check(
                f"{name}_solution",
                value,
                value > 1 - tol,
                f"{detail} of {' '.join(_.label for _ in task.solution)}",
            )
        )
    return checks


def check_iswap_forms(tol: float) -> list[IdentityCheck]:
    """`T T = S` and the two iSWAP circuits agree up to a global phase."""
    t_squared = base_gate_matrix("T") @ base_gate_matrix("T")
    deviation = float(np.max(np.abs(t_squared - base_gate_matrix("S"))))
    alternative = _circuit(ISWAP_ALTERNATIVE, 2)
    five_gate = circuit_unitary(build_task("iswap").solution, 2)
    return [
        _check("t_squared_is_s", deviation, deviation < 1e-12, "max |T T - S|"),
        _check(
            "iswap_alternative_form",
            trace_fidelity(alternative, TARGET_UNITARIES["iswap"]),
            trace_fidelity(alternative, TARGET_UNITARIES["iswap"]) > 1 - tol,
            "trace fidelity of " + " ".join(ISWAP_ALTERNATIVE),
        ),
        _check(
            "iswap_forms_equivalent",
            trace_fidelity(five_gate, alternative),
            trace_fidelity(five_gate, alternative) > 1 - tol,
            "trace fidelity between the five-gate and two-CNOT circuits",
        ),
    ]


def check_space_sizes() -> list[IdentityCheck]:
    """Space-size formula against the documented per-task sizes."""
    checks = []
    for name in TASK_NAMES:
        task = build_task(name)
        bound = space_size(
            len(task.action_sets[Representation.MATRIX]), task.solution_length
        ).bound
        checks.append(
            _check(
                f"{name}_space_size",
                float(bound),
                bound == SPACE_SIZES[name],
                f"expected {SPACE_SIZES[name]}",
            )
        )
    return checks


def _run(env: CircuitEnv, actions: Sequence[ActionSpec]) -> tuple[float, int]:
    env.reset()
    reward, steps = 0.0, 0
    for action in actions:
        _, reward, done = env.step(action)
        steps += 1
        if done:
            break
    return reward, steps


def check_trajectories(tol: float) -> list[IdentityCheck]:
    """Expert and reverse round-trip trajectories succeed at exactly their length."""
    checks = []
    for name in TASK_NAMES:
        task = build_task(name)
        length = task.solution_length
        reverse_actions = [
            ActionSpec(first=placement, inverse=True)
            for placement in reversed(task.solution)
        ]
        env = CircuitEnv(task, Representation.REVERSE, length)
        reward, steps = _run(env, reverse_actions)
        circuit = circuit_from_trajectory(reverse_actions, Representation.REVERSE)
        fidelity = trace_fidelity(
            circuit_unitary(circuit, task.n_qubits), task.target_unitary
        )
        passed = (
            reward > 0
            and steps == length
            and list(circuit) == list(task.solution)
            and fidelity > 1 - tol
        )
        checks.append(
            _check(
                f"{name}_reverse_round_trip",
                fidelity,
                passed,
                f"reward {reward:g} after {steps} of {length} steps",
            )
        )

        for representation in (Representation.MATRIX, Representation.REVERSE):
            expert = expert_trajectory(task, representation)
            if expert is None:
                continue
            env = CircuitEnv(task, representation, length)
            reward, steps = _run(env, expert.actions)
            checks.append(
                _check(
                    f"{name}_{representation.value}_expert",
                    reward,
                    reward > 0 and steps == length,
                    f"reward {reward:g} after {steps} of {length} steps",
                )
            )
    return checks


def verify_identities(tol: float = 1e-9) -> list[IdentityCheck]:
    """Run the complete identity and consistency suite.

    Parameters:
        tol: Required closeness of fidelities to 1.

    Returns:
        One check per identity, in a stable order.

    """
    return [
        check_bell_matrix(),
        *check_targets(),
        *check_solutions(tol),
        *check_iswap_forms(tol),
        *check_space_sizes(),
        *check_trajectories(tol),
    ]


def require_identities(checks: Sequence[IdentityCheck]) -> None:
    """Raise unless every check passed.

    Raises:
        VerificationError: Naming the failed checks.

    """
    failures = [_.name for _ in checks if not _.passed]
    if failures:
        raise VerificationError(
            f"{len(failures)} of {len(checks)} checks failed: {', '.join(failures)}"
        )
