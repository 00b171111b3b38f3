"""Pydantic models/schemas for gates and their placement on qubits."""

from __future__ import annotations

import re
from enum import Enum
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

_LABEL_RE = re.compile(r"^(?P<stem>CNOT|CP|H|T|S|X|Z)(?P<qubits>\d+)(?P<inv>\^-1)?$")


class BaseGate(Enum):
    """Enumeration of the supported base gates."""

    H = "H"
    T = "T"
    S = "S"
    X = "X"
    Z = "Z"
    CNOT = "CNOT"
    CP = "CP"
    CPINV = "CPinv"

    @property
    def n_qubits(self) -> int:
        """Number of qubits the gate acts on."""
        return 2 if self in (BaseGate.CNOT, BaseGate.CP, BaseGate.CPINV) else 1

    @property
    def self_inverse(self) -> bool:
        """Whether the gate is its own inverse."""
        return self in (BaseGate.H, BaseGate.X, BaseGate.Z, BaseGate.CNOT)


class GateName(BaseModel):
    """A base gate together with a dagger (conjugate transpose) flag."""

    model_config = ConfigDict(frozen=True)

    base: BaseGate
    dagger: bool = False

    @property
    def n_qubits(self) -> int:
        return self.base.n_qubits

    def inverse(self) -> GateName:
        """Return the gate name of the inverse gate."""
        return GateName(base=self.base, dagger=not self.dagger)

    @property
    def inverted(self) -> bool:
        """Whether the gate is written as an inverse, e.g., `CP^-1` or `T^-1`.

        `CPinv` counts as the inverse of `CP`, so its dagger is plain `CP`.
        """
        return (self.base is BaseGate.CPINV) != self.dagger

    @property
    def stem(self) -> str:
        return "CP" if self.base is BaseGate.CPINV else self.base.value


class GatePlacement(BaseModel):
    """A gate acting on an ordered list of distinct qubits.

    Two-qubit gates list `[control, target]`.
    """

    model_config = ConfigDict(frozen=True)

    gate: GateName
    qubits: Annotated[
        tuple[int, ...],
        Field(description="Qubit indices; `(control, target)` for two-qubit gates."),
    ]

    @model_validator(mode="after")
    def check_qubits(self) -> GatePlacement:
        """Qubit count must match the gate arity and indices must be distinct."""
        if len(self.qubits) != self.gate.n_qubits:
            raise ValueError(
                f"{self.gate.base.value} acts on {self.gate.n_qubits} qubit(s), got "
                f"qubits={self.qubits}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"Qubit indices must be distinct, got {self.qubits}")
        if any(qubit < 0 for qubit in self.qubits):
            raise ValueError(f"Qubit indices must be non-negative, got {self.qubits}")
        return self

    @classmethod
    def of(
        cls, base: BaseGate | str, *qubits: int, dagger: bool = False
    ) -> GatePlacement:
        """Shorthand constructor, e.g., `GatePlacement.of("CNOT", 0, 1)`."""
        return cls(gate=GateName(base=BaseGate(base), dagger=dagger), qubits=qubits)

    @classmethod
    def parse(cls, label: str) -> GatePlacement:
        """Parse a label such as `H0`, `CNOT01`, `CP10^-1` or `T1^-1`."""
        match = _LABEL_RE.match(label.strip())
        if match is None:
            raise ValueError(f"Cannot parse gate label {label!r}")
        stem, inverted = match.group("stem"), bool(match.group("inv"))
        qubits = tuple(int(_) for _ in match.group("qubits"))
        if stem == "CP":
            return cls.of(BaseGate.CPINV if inverted else BaseGate.CP, *qubits)
        return cls.of(stem, *qubits, dagger=inverted)

    def inverse(self) -> GatePlacement:
        return GatePlacement(gate=self.gate.inverse(), qubits=self.qubits)

    @property
    def label(self) -> str:
        suffix = "^-1" if self.gate.inverted else ""
        return f"{self.gate.stem}{''.join(str(_) for _ in self.qubits)}{suffix}"

    def __str__(self) -> str:
        return self.label
