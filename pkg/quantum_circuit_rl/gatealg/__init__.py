"""Few-qubit complex linear algebra.

Qubit 0 is the leftmost Kronecker factor, i.e., the most-significant bit of a basis
index.
"""

from __future__ import annotations

from .fingerprint import fingerprint
from .gates import base_gate_matrix, gate_label, override_gate
from .linalg import (
    StateVector,
    UnitaryMatrix,
    apply,
    basis_state,
    circuit_unitary,
    compose,
    dagger,
    embed,
    is_normalized,
    is_unitary,
    n_qubits_of,
    state_overlap,
    trace_fidelity,
)

__all__ = (
    "StateVector",
    "UnitaryMatrix",
    "apply",
    "base_gate_matrix",
    "basis_state",
    "circuit_unitary",
    "compose",
    "dagger",
    "embed",
    "fingerprint",
    "gate_label",
    "is_normalized",
    "is_unitary",
    "n_qubits_of",
    "override_gate",
    "state_overlap",
    "trace_fidelity",
)
