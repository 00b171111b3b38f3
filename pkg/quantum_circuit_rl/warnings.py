"""Package warnings.

All warnings emitted by the package derive from
[`QuantumCircuitRLWarning`][quantum_circuit_rl.warnings.QuantumCircuitRLWarning].
"""

from __future__ import annotations


class QuantumCircuitRLWarning(UserWarning):
    """Base Warning for the `quantum-circuit-rl` package."""

    def __init__(self, detail: str | None = None, *args: object) -> None:
        detail = detail or self.__doc__ or ""
        super().__init__(detail, *args)
        self.detail = detail

    def __str__(self) -> str:
        return self.detail


class ExpertTrajectoryWarning(QuantumCircuitRLWarning):
    """An injected expert trajectory did not end with the success reward in its
    environment. The transitions are still used for learning."""
