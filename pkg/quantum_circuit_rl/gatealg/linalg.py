"""Embedding, composition and comparison of unitaries and state vectors."""

from __future__ import annotations

from functools import reduce
from os import getenv
from typing import TYPE_CHECKING

import numpy as np
import numpy.typing as npt

from quantum_circuit_rl.common.config import CONFIG
from quantum_circuit_rl.common.exceptions import (
    DimensionMismatchError,
    QubitIndexError,
)
from quantum_circuit_rl.gatealg.gates import base_gate_matrix

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Iterable

    from quantum_circuit_rl.models import GatePlacement

UnitaryMatrix = npt.NDArray[np.complex128]
"""Dense `2^n x 2^n` complex matrix."""

StateVector = npt.NDArray[np.complex128]
"""Dense complex vector of length `2^n`."""


def n_qubits_of(array: np.ndarray) -> int:
    """Number of qubits of a square matrix or vector whose size is a power of two."""
    dim = array.shape[0]
    if dim < 2 or dim & (dim - 1) or any(_ != dim for _ in array.shape):
        raise DimensionMismatchError(
            f"Not a qubit register operand: shape {array.shape}"
        )
    return dim.bit_length() - 1


def embed(placement: GatePlacement, n_qubits: int) -> UnitaryMatrix:
    """Embed a placed gate into an `n_qubits` register.

    The gate acts on the listed qubits (in listed order, first listed = most
    significant local bit) and as the identity elsewhere. This covers reversed and
    non-adjacent qubit pairs.

    Raises:
        QubitIndexError: If a qubit index is outside the register.

    """
    qubits = list(placement.qubits)
    if max(qubits) >= n_qubits:
        raise QubitIndexError(
            f"{placement.label} does not fit a {n_qubits}-qubit register"
        )
    gate = base_gate_matrix(placement.gate)
    k = len(qubits)
    dim = 2**n_qubits

    # Contract the gate's input legs with the identity's output legs on `qubits`,
    # then move the gate's output legs back into place.
    identity = np.eye(dim, dtype=np.complex128).reshape([2] * (2 * n_qubits))
    gate_tensor = gate.reshape([2] * (2 * k))
    result = np.tensordot(gate_tensor, identity, axes=(list(range(k, 2 * k)), qubits))
    result = np.moveaxis(result, list(range(k)), qubits)
    return result.reshape(dim, dim)


def _check_same_shape(first: np.ndarray, second: np.ndarray, operation: str) -> None:
    if first.shape[-1] != second.shape[0]:
        raise DimensionMismatchError(
            f"Cannot {operation} operands of shapes {first.shape} and {second.shape}"
        )


def compose(action: UnitaryMatrix, state: UnitaryMatrix) -> UnitaryMatrix:
    """Return `action @ state`, i.e., `action` applied after `state`."""
    if action.shape != state.shape:
        raise DimensionMismatchError(
            f"Cannot compose operands of shapes {action.shape} and {state.shape}"
        )
    return action @ state


def apply(unitary: UnitaryMatrix, psi: StateVector) -> StateVector:
    """Return `unitary @ psi`. No renormalization is performed."""
    if psi.ndim != 1:
        raise DimensionMismatchError(f"Expected a state vector, got shape {psi.shape}")
    _check_same_shape(unitary, psi, "apply")
    return unitary @ psi


def dagger(unitary: UnitaryMatrix) -> UnitaryMatrix:
    """Conjugate transpose."""
    return unitary.conj().T


def trace_fidelity(current: UnitaryMatrix, target: UnitaryMatrix) -> float:
    """`|Tr(current^dagger target)| / 2^n`, insensitive to global phases."""
    if current.shape != target.shape:
        raise DimensionMismatchError(
            f"Cannot compare unitaries of shapes {current.shape} and {target.shape}"
        )
    value = abs(np.trace(current.conj().T @ target)) / current.shape[0]
    return float(min(value, 1.0))


def state_overlap(current: StateVector, target: StateVector) -> float:
    """`|<current|target>|^2`."""
    if current.shape != target.shape:
        raise DimensionMismatchError(
            f"Cannot compare states of shapes {current.shape} and {target.shape}"
        )
    return float(min(abs(np.vdot(current, target)) ** 2, 1.0))


def circuit_unitary(
    placements: Iterable[GatePlacement], n_qubits: int
) -> UnitaryMatrix:
    """Product of a circuit's gates; the first placement is applied first."""
    return reduce(
        lambda accumulated, placement: compose(embed(placement, n_qubits), accumulated),
        placements,
        np.eye(2**n_qubits, dtype=np.complex128),
    )


def basis_state(n_qubits: int, index: int = 0) -> StateVector:
    """Computational basis state `|index>`, e.g., `|0...0>` for `index=0`."""
    if not 0 <= index < 2**n_qubits:
        raise QubitIndexError(
            f"Basis index {index} outside a {n_qubits}-qubit register"
        )
    psi = np.zeros(2**n_qubits, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def is_unitary(matrix: np.ndarray, tol: float | None = None) -> bool:
    """Whether `U U^dagger = I` within `tol` in the Frobenius norm."""
    tol = CONFIG.unitarity_tol if tol is None else tol
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    deviation = matrix @ matrix.conj().T - np.eye(matrix.shape[0])
    return bool(np.linalg.norm(deviation, "fro") <= tol)


def is_normalized(psi: np.ndarray, tol: float | None = None) -> bool:
    """Whether the L2 norm of `psi` is 1 within `tol`."""
    tol = CONFIG.unitarity_tol if tol is None else tol
    return bool(abs(np.linalg.norm(psi) - 1.0) <= tol)
