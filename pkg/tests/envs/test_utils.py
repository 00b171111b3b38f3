"""Tests for envs/utils.py and envs/registry.py"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from quantum_circuit_rl.envs import CircuitEnv


def _distinct_up_to_phase(unitaries: list) -> int:
    """Brute-force count of unitaries that differ by more than a global phase"""
    from quantum_circuit_rl.gatealg import trace_fidelity

    representatives: list = []
    for unitary in unitaries:
        if not any(trace_fidelity(unitary, _) > 1 - 1e-9 for _ in representatives):
            representatives.append(unitary)
    return len(representatives)


def test_explore_matches_brute_force(walkthrough_env: CircuitEnv) -> None:
    """Depth-2 exploration of the five-action Bell tree deduplicates exactly"""
    from itertools import product

    import numpy as np

    from quantum_circuit_rl.envs import explore
    from quantum_circuit_rl.gatealg import embed

    matrices = [embed(_.first, 2) for _ in walkthrough_env.actions]
    unitaries = [np.eye(4, dtype=complex)]
    unitaries.extend(matrices)
    unitaries.extend(second @ first for first, second in product(matrices, repeat=2))

    size = explore(walkthrough_env, 2)

    assert size <= 31
    assert size == _distinct_up_to_phase(unitaries)


def test_explore_is_idempotent(walkthrough_env: CircuitEnv) -> None:
    """Exploring again registers nothing new"""
    from quantum_circuit_rl.envs import explore, registry_size

    size = explore(walkthrough_env, 2)
    assert explore(walkthrough_env, 2) == size
    assert registry_size(walkthrough_env) == size
    assert explore(walkthrough_env, 0) == size


def test_circuit_from_reverse_trajectory() -> None:
    """Reverse trajectories are reversed and inverted"""
    from quantum_circuit_rl.envs import circuit_from_trajectory
    from quantum_circuit_rl.models import ActionSpec, Representation

    trajectory = [
        ActionSpec.single("CNOT01", inverse=True),
        ActionSpec.single("T1", inverse=True),
        ActionSpec.single("H0", inverse=True),
    ]
    assert [_.label for _ in trajectory] == ["CNOT01^-1", "T1^-1", "H0^-1"]

    circuit = circuit_from_trajectory(trajectory, Representation.REVERSE)
    assert [_.label for _ in circuit] == ["H0", "T1", "CNOT01"]


def test_circuit_from_composite_trajectory() -> None:
    """Composite actions contribute both gates in order"""
    from quantum_circuit_rl.envs import circuit_from_trajectory
    from quantum_circuit_rl.models import ActionSpec, Representation

    trajectory = [ActionSpec.pair("H0", "CNOT01"), ActionSpec.single("T1")]
    circuit = circuit_from_trajectory(trajectory, Representation.TN)
    assert [_.label for _ in circuit] == ["H0", "CNOT01", "T1"]


def test_registry_indices() -> None:
    """Indices are dense and follow the first visit"""
    from quantum_circuit_rl.envs import StateRegistry

    registry = StateRegistry()
    assert registry.register(b"a") == (0, True)
    assert registry.register(b"b") == (1, True)
    assert registry.register(b"a") == (0, False)
    assert registry.lookup(b"c") is None
    assert b"b" in registry
    assert registry.count == len(registry) == 2


def test_registry_hex_round_trip() -> None:
    """Saved keys rebuild the same indices; the cap is enforced on rebuild"""
    from quantum_circuit_rl.common.exceptions import RegistryOverflowError
    from quantum_circuit_rl.envs import StateRegistry

    registry = StateRegistry()
    for key in (b"\x00\x01", b"\xff", b"\x10"):
        registry.register(key)

    rebuilt = StateRegistry.from_hex(registry.keys_hex())
    assert rebuilt.lookup(b"\x10") == 2
    with pytest.raises(RegistryOverflowError):
        StateRegistry.from_hex(registry.keys_hex(), cap=2)
