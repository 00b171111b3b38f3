"""Specific Quantum Circuit RL Python exceptions."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from quantum_circuit_rl.models import BenchReport

__all__ = (
    "BenchmarkError",
    "ConfigurationError",
    "DegenerateStateError",
    "DimensionMismatchError",
    "EpisodeDoneError",
    "InvalidActionError",
    "QuantumCircuitRLError",
    "QubitIndexError",
    "RegistryOverflowError",
    "StateIndexError",
    "VerificationError",
)


class QuantumCircuitRLError(Exception):
    """General Quantum Circuit RL exception."""


class ConfigurationError(QuantumCircuitRLError, ValueError):
    """An invalid name or combination of task, representation, algorithm or gate."""


class DimensionMismatchError(QuantumCircuitRLError, ValueError):
    """Operands of a gate-algebra operation have incompatible dimensions."""


class DegenerateStateError(QuantumCircuitRLError, ValueError):
    """An all-zero array cannot be fingerprinted."""


class QubitIndexError(QuantumCircuitRLError, IndexError):
    """A gate placement refers to a qubit outside the register."""


class InvalidActionError(QuantumCircuitRLError, ValueError):
    """The action is not part of the environment's action set."""


class EpisodeDoneError(QuantumCircuitRLError, RuntimeError):
    """`step()` was called on an environment whose episode has ended."""


class RegistryOverflowError(QuantumCircuitRLError, RuntimeError):
    """A new state would push the state registry beyond its configured cap."""


class StateIndexError(QuantumCircuitRLError, IndexError):
    """A state index exceeds the one-hot input dimension of a policy network."""


class VerificationError(QuantumCircuitRLError):
    """One or more circuit identities did not hold."""


class BenchmarkError(QuantumCircuitRLError, RuntimeError):
    """A benchmark round failed.

    The rounds completed before the failure are preserved in `partial`.
    """

    def __init__(self, message: str, partial: BenchReport | None = None) -> None:
        super().__init__(message)
        self.partial = partial
