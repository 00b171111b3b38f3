"""Base gate matrices."""

from __future__ import annotations

from contextlib import contextmanager
from os import getenv
from typing import TYPE_CHECKING

import numpy as np

from quantum_circuit_rl.common.exceptions import ConfigurationError
from quantum_circuit_rl.common.logger import LOGGER
from quantum_circuit_rl.models import BaseGate, GateName

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Iterator

    from quantum_circuit_rl.gatealg.linalg import UnitaryMatrix
    from quantum_circuit_rl.models import GatePlacement


_SQRT2_INV = 1 / np.sqrt(2)

_BASE_MATRICES: dict[BaseGate, np.ndarray] = {
    BaseGate.H: np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV,
    BaseGate.T: np.diag([1, np.exp(1j * np.pi / 4)]).astype(np.complex128),
    BaseGate.S: np.diag([1, 1j]).astype(np.complex128),
    BaseGate.X: np.array([[0, 1], [1, 0]], dtype=np.complex128),
    BaseGate.Z: np.diag([1, -1]).astype(np.complex128),
    BaseGate.CNOT: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
    ),
    BaseGate.CP: np.diag([1, 1, 1, np.exp(1j * np.pi / 2)]).astype(np.complex128),
    BaseGate.CPINV: np.diag([1, 1, 1, np.exp(-1j * np.pi / 2)]).astype(np.complex128),
}
for _matrix in _BASE_MATRICES.values():
    _matrix.setflags(write=False)

_OVERRIDES: dict[BaseGate, np.ndarray] = {}


def _as_base_gate(name: GateName | BaseGate | str) -> tuple[BaseGate, bool]:
    if isinstance(name, GateName):
        return name.base, name.dagger
    try:
        return BaseGate(name), False
    except ValueError as exc:
        raise ConfigurationError(f"Unknown gate name: {name!r}") from exc


def base_gate_matrix(name: GateName | BaseGate | str) -> UnitaryMatrix:
    """Return the 2x2 or 4x4 matrix of a base gate.

    Two-qubit gates are written in the `|control, target>` basis.

    Parameters:
        name: The gate. A `GateName` with `dagger=True` returns the conjugate
            transpose.

    Returns:
        A fresh, writeable `complex128` array.

    Raises:
        ConfigurationError: If `name` is not a recognized gate.

    """
    base, dagger = _as_base_gate(name)
    matrix = _OVERRIDES.get(base, _BASE_MATRICES[base])
    return matrix.conj().T.copy() if dagger else matrix.copy()


@contextmanager
def override_gate(name: BaseGate | str, matrix: np.ndarray) -> Iterator[None]:
    """Temporarily replace the definition of a base gate.

    Every matrix built inside the context (through
    [`base_gate_matrix()`][quantum_circuit_rl.gatealg.gates.base_gate_matrix]) uses
    the replacement. Used to check that the identity suite detects a wrong gate.

    Usage:

    ```python
    from quantum_circuit_rl.gatealg import override_gate

    with override_gate("T", np.diag([1, 1j])):
        # T now behaves like S
        ...
    ```

    """
    base, _ = _as_base_gate(name)
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != _BASE_MATRICES[base].shape:
        raise ConfigurationError(
            f"Override for {base.value} must have shape {_BASE_MATRICES[base].shape}, "
            f"got {matrix.shape}"
        )
    previous = _OVERRIDES.get(base)
    _OVERRIDES[base] = matrix
    LOGGER.debug("Overriding gate %s", base.value)
    try:
        yield
    finally:
        if previous is None:
            del _OVERRIDES[base]
        else:
            _OVERRIDES[base] = previous


def gate_label(placement: GatePlacement) -> str:
    """Human-readable label, e.g., `H0`, `CNOT01` or `CP10^-1`."""
    return placement.label
