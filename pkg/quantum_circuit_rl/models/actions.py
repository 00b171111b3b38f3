"""Pydantic models/schemas for MDP actions, representations and reward rules."""

from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from quantum_circuit_rl.models.gates import GatePlacement


class Representation(Enum):
    """The three MDP formulations of circuit synthesis."""

    MATRIX = "matrix"
    REVERSE = "reverse"
    TN = "tn"


class RewardMode(Enum):
    """How the current value is compared with the target."""

    UNITARY_TRACE = "unitary_trace"
    STATE_OVERLAP = "state_overlap"


class RewardRule(BaseModel):
    """Sparse success reward: `success_reward` iff the fidelity exceeds `threshold`."""

    model_config = ConfigDict(frozen=True)

    mode: RewardMode
    threshold: Annotated[float, Field(gt=0, le=1)] = 0.99
    success_reward: Annotated[float, Field(gt=0)] = 100.0


class ActionSpec(BaseModel):
    """A single gate, an ordered pair of gates, or the inverse of a single gate.

    Pairs apply `first` before `second`.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["single", "pair"] = "single"
    first: GatePlacement
    second: GatePlacement | None = None
    inverse: Annotated[
        bool,
        Field(description="Reverse-representation action applying `first`'s inverse."),
    ] = False

    @model_validator(mode="after")
    def check_kind(self) -> ActionSpec:
        """`second` is present iff `kind` is `"pair"`; pairs are never inverted."""
        if (self.kind == "pair") != (self.second is not None):
            raise ValueError("A 'pair' action needs exactly a `second` gate.")
        if self.kind == "pair" and self.inverse:
            raise ValueError("Pair actions cannot be inverse actions.")
        return self

    @classmethod
    def single(cls, label: str, inverse: bool = False) -> ActionSpec:
        return cls(first=GatePlacement.parse(label), inverse=inverse)

    @classmethod
    def pair(cls, first: str, second: str) -> ActionSpec:
        return cls(
            kind="pair",
            first=GatePlacement.parse(first),
            second=GatePlacement.parse(second),
        )

    def applied(self) -> tuple[GatePlacement, ...]:
        """Gates applied to the environment value, in time order."""
        if self.inverse:
            return (self.first.inverse(),)
        if self.second is None:
            return (self.first,)
        return (self.first, self.second)

    def inverted(self) -> ActionSpec:
        """The reverse-representation counterpart of a single action."""
        if self.kind == "pair":
            raise ValueError("Pair actions have no reverse-representation counterpart.")
        return ActionSpec(first=self.first, inverse=not self.inverse)

    @property
    def label(self) -> str:
        if self.second is not None:
            return f"({self.first.label}, {self.second.label})"
        return self.applied()[0].label

    def __str__(self) -> str:
        return self.label
