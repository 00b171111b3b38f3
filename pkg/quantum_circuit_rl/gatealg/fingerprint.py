"""Canonical, global-phase-free keys for unitaries and state vectors."""

from __future__ import annotations

import numpy as np

from quantum_circuit_rl.common.config import CONFIG
from quantum_circuit_rl.common.exceptions import (
    ConfigurationError,
    DegenerateStateError,
)


def fingerprint(state: np.ndarray, tol: float | None = None) -> bytes:
    """Hashable key identifying `state` up to a global phase.

    The array is rotated so that its first entry with magnitude above `tol` is
    positive real. Real and imaginary parts are then rounded to the nearest
    multiple of `tol` and serialized together with the array shape.

    Parameters:
        state: A unitary matrix or a state vector.
        tol: Rounding grid. Defaults to `CONFIG.fingerprint_tol`.

    Returns:
        Deterministic bytes; equal for arrays equal up to phase and rounding.

    Raises:
        DegenerateStateError: If every entry is (numerically) zero.

    """
    tol = CONFIG.fingerprint_tol if tol is None else tol
    if tol <= 0:
        raise ConfigurationError(f"Fingerprint tolerance must be positive, got {tol}")

    flat = np.asarray(state, dtype=np.complex128).ravel()
    support = np.flatnonzero(np.abs(flat) > tol)
    if not support.size:
        raise DegenerateStateError("Cannot fingerprint an all-zero array")

    pivot = flat[support[0]]
    normalized = flat * (np.conj(pivot) / abs(pivot))
    grid = np.rint(np.concatenate((normalized.real, normalized.imag)) / tol)
    header = np.asarray(state.shape, dtype=np.int64).tobytes()
    return header + grid.astype(np.int64).tobytes()
