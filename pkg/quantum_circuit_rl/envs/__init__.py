"""Circuit synthesis environments."""

from __future__ import annotations

from .environment import CircuitEnv, EnvState, StepResult, make_env
from .registry import StateRegistry
from .utils import circuit_from_trajectory, explore, registry_size

__all__ = (
    "CircuitEnv",
    "EnvState",
    "StateRegistry",
    "StepResult",
    "circuit_from_trajectory",
    "explore",
    "make_env",
    "registry_size",
)
