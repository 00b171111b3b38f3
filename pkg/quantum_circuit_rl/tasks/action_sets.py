"""Action sets of the benchmark tasks.

Actions are written as gate labels (see
[`GatePlacement.parse()`][quantum_circuit_rl.models.gates.GatePlacement.parse]);
tuples are composite actions whose first gate is applied first.
"""

from __future__ import annotations

from quantum_circuit_rl.models import ActionSpec

ActionLabels = tuple[str | tuple[str, str], ...]


def build_actions(labels: ActionLabels) -> tuple[ActionSpec, ...]:
    """Turn labels into `ActionSpec`s."""
    return tuple(
        ActionSpec.pair(*_) if isinstance(_, tuple) else ActionSpec.single(_)
        for _ in labels
    )


def inverted_actions(actions: tuple[ActionSpec, ...]) -> tuple[ActionSpec, ...]:
    """The reverse-representation counterpart of a matrix-representation set."""
    return tuple(action.inverted() for action in actions)


# Matrix representation
TWO_QUBIT_GATES: ActionLabels = ("H0", "H1", "T0", "T1", "CNOT01", "CNOT10")
BELL_X: ActionLabels = ("H0", "H1", "T0", "X0", "X1", "CNOT01")
BELL_XZ: ActionLabels = ("H0", "H1", "T0", "X0", "X1", "Z0", "Z1", "CNOT01")
GHZ: ActionLabels = ("H0", "H1", "H2", "T0", "T1", "T2", "CNOT01", "CNOT12")
Z_THREE_QUBITS: ActionLabels = (
    "H0", "H1", "H2", "T0", "T1", "T2", "S0", "S1", "S2", "CNOT01",
)  # fmt: skip
TOFFOLI: ActionLabels = ("CNOT21", "H0", "CP10", "CP10^-1", "CP20")

WALKTHROUGH_MATRIX: ActionLabels = ("H0", "H1", "T0", "T1", "CNOT01")

# Tensor-network representation
TN_BELL: ActionLabels = (
    "H0", "H1", "T0", "T1", "X0", "X1", "CNOT01",
    ("H0", "H1"), ("H0", "T1"), ("H1", "T0"), ("T0", "T1"), ("Z0", "Z1"),
    ("T0", "CNOT01"), ("CNOT01", "T0"), ("T1", "CNOT01"), ("CNOT01", "T1"),
    ("H0", "CNOT01"), ("CNOT01", "H0"), ("H1", "CNOT01"), ("CNOT01", "H1"),
)  # fmt: skip
TN_TWO_QUBIT_GATES: ActionLabels = (
    "H0", "H1", "T0", "T1", "CNOT01", "CNOT10",
    ("H0", "H1"), ("H0", "T1"), ("H1", "T0"), ("T0", "T1"),
    ("CNOT01", "CNOT10"), ("CNOT10", "CNOT01"),
    ("T0", "CNOT01"), ("CNOT01", "T0"), ("T1", "CNOT01"), ("CNOT01", "T1"),
    ("H0", "CNOT01"), ("CNOT01", "H0"), ("H1", "CNOT01"), ("CNOT01", "H1"),
)  # fmt: skip
TN_THREE_QUBITS: ActionLabels = (
    "H0", "H1", "H2", "T0", "S0", "S1", "S2", "T1", "T2",
    "CNOT01", "CNOT12", "CNOT02",
    ("H0", "H1"), ("H0", "T1"), ("T0", "H1"), ("T0", "T1"),
    ("H0", "H2"), ("H0", "T2"), ("T0", "H2"), ("T0", "T2"),
    ("H1", "H2"), ("H1", "T2"), ("T1", "H2"), ("T1", "T2"),
    *(
        (gate, cnot)
        for cnot in ("CNOT01", "CNOT02", "CNOT12")
        for gate in ("H0", "T0", "H1", "T1", "H2", "T2")
    ),
    ("CNOT01", "CNOT02"), ("CNOT01", "CNOT12"), ("CNOT02", "CNOT12"),
)  # fmt: skip

WALKTHROUGH_TN: ActionLabels = (
    "H0", "H1", "T0", "T1", "CNOT01",
    ("H0", "H1"), ("H0", "T1"), ("H1", "T0"), ("T0", "T1"),
    ("T0", "CNOT01"), ("CNOT01", "T0"), ("T1", "CNOT01"), ("CNOT01", "T1"),
    ("H0", "CNOT01"), ("CNOT01", "H0"), ("H1", "CNOT01"), ("CNOT01", "H1"),
)  # fmt: skip
