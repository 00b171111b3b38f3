"""Tests for agents/dqn.py"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    import numpy as np

    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import TaskSpec

    from ..conftest import RunSteps


def test_one_hot_input_dim(walkthrough_env: CircuitEnv) -> None:
    """The input size is the smaller of the tree size and the possible visits"""
    from quantum_circuit_rl.agents import one_hot_input_dim
    from quantum_circuit_rl.models import DQNConfig

    assert one_hot_input_dim(walkthrough_env, DQNConfig(episodes=100)) == 31
    # 1 registered state + 2 steps for each of 3 episodes and 1 rollout
    assert one_hot_input_dim(walkthrough_env, DQNConfig(episodes=3)) == 9


def test_encode_states(walkthrough_env: CircuitEnv, run_steps: RunSteps) -> None:
    """Dense encodings stack real and imaginary parts of registered values"""
    import numpy as np

    from quantum_circuit_rl.agents import encode_states

    run_steps(walkthrough_env, ["T0"])
    assert encode_states(walkthrough_env, [0, 1], "one_hot").tolist() == [0, 1]

    dense = encode_states(walkthrough_env, [0, 1], "matrix")
    assert dense.shape == (2, 32)
    assert np.array_equal(dense[0, :16], np.eye(4).ravel())
    assert np.array_equal(dense[0, 16:], np.zeros(16))
    assert dense[1, 16 + 15] == pytest.approx(np.sin(np.pi / 4))


@pytest.mark.parametrize("encoding", ["one_hot", "matrix"])
def test_train_dqn(
    encoding: str, walkthrough_env: CircuitEnv, rng: np.random.Generator
) -> None:
    """Training runs one step per transition once a batch is available"""
    from quantum_circuit_rl.agents import best_of_rollouts, train_dqn
    from quantum_circuit_rl.models import DQNConfig

    config = DQNConfig(
        episodes=20,
        max_steps=2,
        batch_size=8,
        hidden=(16,),
        target_every=5,
        expert_passes=0,
        state_encoding=encoding,
    )
    agent, traces = train_dqn(walkthrough_env, config, rng=rng)

    assert len(traces) == 20
    steps = sum(_.steps for _ in traces)
    assert len(agent.buffer) == steps
    assert agent.train_steps == steps - config.batch_size + 1
    assert agent.net.input_dim == (31 if encoding == "one_hot" else 32)
    assert agent.net.encoding == encoding

    _, trajectory = best_of_rollouts(agent, walkthrough_env, 2, rng)
    assert 1 <= len(trajectory) <= 2


def test_dqn_expert_passes(
    walkthrough_env: CircuitEnv, rng: np.random.Generator
) -> None:
    """Expert passes fill the buffer before the first episode"""
    from quantum_circuit_rl.agents import train_dqn
    from quantum_circuit_rl.models import ActionSpec, DQNConfig, ExpertTrajectory

    expert = ExpertTrajectory(
        actions=(ActionSpec.single("H0"), ActionSpec.single("CNOT01"))
    )
    config = DQNConfig(
        episodes=0, max_steps=2, batch_size=4, hidden=(8,), expert_passes=3
    )
    agent, traces = train_dqn(walkthrough_env, config, expert, rng)

    assert traces == []
    assert len(agent.buffer) == 6
    assert agent.train_steps == 3
    # Every pass ends with a hard target update
    for target, policy in zip(
        agent.net.parameters(target=True), agent.net.parameters()
    ):
        assert (target == policy).all()


def test_configured_input_dim_too_small(
    walkthrough_env: CircuitEnv, rng: np.random.Generator
) -> None:
    """A network too narrow for the visited states fails loudly"""
    from quantum_circuit_rl.agents import train_dqn
    from quantum_circuit_rl.common.exceptions import StateIndexError
    from quantum_circuit_rl.models import DQNConfig

    config = DQNConfig(episodes=50, max_steps=2, hidden=(4,), input_dim=1, epsilon=1.0)
    with pytest.raises(StateIndexError):
        train_dqn(walkthrough_env, config, rng=rng)


@pytest.mark.parametrize("encoding", ["one_hot", "matrix"])
def test_train_dqn_is_deterministic(encoding: str, bell_task: TaskSpec) -> None:
    """The same seed reproduces the weights and traces bit for bit"""
    import numpy as np

    from quantum_circuit_rl.agents import train_dqn
    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import DQNConfig, Representation

    config = DQNConfig(
        episodes=15,
        max_steps=2,
        batch_size=4,
        hidden=(8, 8),
        target_every=3,
        expert_passes=0,
        state_encoding=encoding,
    )
    runs = []
    for _ in range(2):
        env = CircuitEnv(bell_task, Representation.MATRIX, 2, walkthrough=True)
        agent, traces = train_dqn(env, config, rng=np.random.default_rng(42))
        runs.append((agent, traces))

    (agent, traces), (other, other_traces) = runs
    assert traces == other_traces
    assert agent.train_steps == other.train_steps > 0
    for target in (False, True):
        for param, other_param in zip(
            agent.net.parameters(target), other.net.parameters(target)
        ):
            assert np.array_equal(param, other_param)
