"""Pydantic models/schemas for benchmark tasks and the circuit-identity suite."""

from __future__ import annotations

from typing import Annotated

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from quantum_circuit_rl.models.actions import ActionSpec, Representation, RewardMode
from quantum_circuit_rl.models.gates import GatePlacement


class ExpertTrajectory(BaseModel):
    """A known-optimal action sequence injected into training."""

    model_config = ConfigDict(frozen=True)

    actions: Annotated[tuple[ActionSpec, ...], Field(min_length=1)]
    repeat_count: Annotated[int, Field(ge=1)] = 10

    @property
    def labels(self) -> list[str]:
        return [_.label for _ in self.actions]


class SpaceSizeReport(BaseModel):
    """Size of a complete `c`-ary tree with `b + 1` levels."""

    model_config = ConfigDict(frozen=True)

    branching: Annotated[int, Field(ge=2, description="Number of actions `c`.")]
    depth: Annotated[int, Field(ge=0, description="Circuit length `b`.")]
    bound: Annotated[int, Field(ge=1)]

    @model_validator(mode="after")
    def bound_is_geometric_sum(self) -> SpaceSizeReport:
        """`bound` must equal `(c^(b+1) - 1) / (c - 1)`."""
        expected = (self.branching ** (self.depth + 1) - 1) // (self.branching - 1)
        if self.bound != expected:
            raise ValueError(f"bound should be {expected}, got {self.bound}")
        return self


class TaskSpec(BaseModel):
    """A circuit synthesis task.

    `target_unitary` is the product of the documented `solution` circuit and
    `target_state` is that unitary applied to `|0...0>`.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    description: str = ""
    n_qubits: Annotated[int, Field(ge=1, le=4)]
    target_unitary: np.ndarray
    target_state: np.ndarray
    solution: Annotated[tuple[GatePlacement, ...], Field(min_length=1)]
    action_sets: dict[Representation, tuple[ActionSpec, ...]]
    walkthrough_action_sets: dict[  # noqa: RUF012
        Representation, tuple[ActionSpec, ...]
    ] = {}
    gate_set: tuple[str, ...]
    tn_reward_mode: RewardMode = RewardMode.STATE_OVERLAP
    expert: ExpertTrajectory | None = None

    @model_validator(mode="after")
    def placements_fit_register(self) -> TaskSpec:
        """Every placement must address qubits inside the register."""
        placements = list(self.solution)
        all_sets = [*self.action_sets.values(), *self.walkthrough_action_sets.values()]
        for actions in all_sets:
            for action in actions:
                placements.extend(action.applied())
        for placement in placements:
            if max(placement.qubits) >= self.n_qubits:
                raise ValueError(
                    f"{placement.label} does not fit a {self.n_qubits}-qubit register"
                )
        return self

    @property
    def solution_length(self) -> int:
        return len(self.solution)


class IdentityCheck(BaseModel):
    """Outcome of one circuit identity or consistency check."""

    name: str
    passed: bool
    value: float | None = None
    detail: str = ""


class CatalogEntry(BaseModel):
    """One row of the task catalog."""

    name: str
    qubits: int
    actions: int
    length: int
    space_size: int
    gate_set: list[str]
