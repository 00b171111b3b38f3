"""Helpers operating on environments and trajectories."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

from quantum_circuit_rl.models import Representation

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Sequence

    from quantum_circuit_rl.envs.environment import CircuitEnv
    from quantum_circuit_rl.models import ActionSpec, GatePlacement


def circuit_from_trajectory(
    actions: Sequence[ActionSpec], representation: Representation
) -> list[GatePlacement]:
    """The circuit (gates in time order) synthesized by a trajectory.

    For the reverse representation the trajectory is reversed and every applied
    gate inverted, e.g., `[CNOT01^-1, H0^-1]` becomes `[H0, CNOT01]`.
    """
    applied = [placement for action in actions for placement in action.applied()]
    if representation is Representation.REVERSE:
        return [placement.inverse() for placement in reversed(applied)]
    return applied


def registry_size(env: CircuitEnv) -> int:
    """Number of distinct states registered by `env` so far."""
    return len(env.registry)


def explore(env: CircuitEnv, depth: int) -> int:
    """Exhaustive breadth-first expansion to `depth`; returns the registry size."""
    env.expand(depth)
    return registry_size(env)
