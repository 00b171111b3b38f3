"""Greedy test rollouts of trained agents."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING, Union

import numpy as np

from quantum_circuit_rl.agents.dqn import DQNAgent, encode_states
from quantum_circuit_rl.agents.network import PolicyNet, net_forward
from quantum_circuit_rl.agents.qlearning import QTable, greedy_choice

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import ActionSpec

Agent = Union[QTable, DQNAgent, PolicyNet]


def q_values(agent: Agent, env: CircuitEnv, state_index: int) -> np.ndarray:
    """Action values of a state without growing a Q-table."""
    if isinstance(agent, QTable):
        return agent.peek(state_index)
    net = agent.net if isinstance(agent, DQNAgent) else agent
    return net_forward(net, encode_states(env, [state_index], net.encoding)[0])


def greedy_rollout(
    agent: Agent,
    env: CircuitEnv,
    max_steps: int | None = None,
    rng: np.random.Generator | None = None,
) -> tuple[bool, list[ActionSpec]]:
    """Run one episode with exploration disabled.

    Ties between maximal action values are broken uniformly at random.

    Returns:
        Whether a step returned the success reward, and the actions taken.

    """
    rng = rng if rng is not None else np.random.default_rng()
    max_steps = env.max_steps if max_steps is None else min(max_steps, env.max_steps)
    state = env.reset()
    trajectory: list[ActionSpec] = []
    reward, done = 0.0, False
    while not done and len(trajectory) < max_steps:
        action = greedy_choice(q_values(agent, env, state), rng)
        state, reward, done = env.step(action)
        trajectory.append(env.actions[action])
    return reward > 0, trajectory


def best_of_rollouts(
    agent: Agent,
    env: CircuitEnv,
    rollouts: int = 1,
    rng: np.random.Generator | None = None,
) -> tuple[bool, list[ActionSpec]]:
    """Up to `rollouts` greedy rollouts; stops at the first success."""
    success, trajectory = False, []
    for _ in range(rollouts):
        success, trajectory = greedy_rollout(agent, env, rng=rng)
        if success:
            break
    return success, trajectory
