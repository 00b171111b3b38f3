"""Deep Q-network training."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING
from warnings import warn

import numpy as np

from quantum_circuit_rl.agents.network import PolicyNet, net_forward, net_train_step
from quantum_circuit_rl.agents.qlearning import greedy_choice
from quantum_circuit_rl.agents.replay import ReplayBuffer
from quantum_circuit_rl.common.exceptions import ConfigurationError
from quantum_circuit_rl.common.logger import LOGGER
from quantum_circuit_rl.models import EpisodeTrace
from quantum_circuit_rl.tasks import space_size
from quantum_circuit_rl.warnings import ExpertTrajectoryWarning

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Sequence

    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import DQNConfig, ExpertTrajectory


def encode_states(
    env: CircuitEnv, indices: Sequence[int] | np.ndarray, encoding: str
) -> np.ndarray:
    """Network inputs for registered states.

    `one_hot` passes the indices through; `matrix` stacks the real and imaginary
    parts of each registered value.
    """
    if encoding == "one_hot":
        return np.asarray(indices, dtype=np.int64)
    values = [env.value_of(int(i)).ravel() for i in np.asarray(indices).reshape(-1)]
    return np.stack([np.concatenate((_.real, _.imag)) for _ in values])


def one_hot_input_dim(
    env: CircuitEnv,
    config: DQNConfig,
    expert: ExpertTrajectory | None = None,
    rollouts: int = 1,
) -> int:
    """Smallest one-hot width guaranteed to cover every state a run can visit.

    The number of states is bounded both by the size of the search tree and by the
    number of steps taken during expert replay, training and the test rollouts.
    """
    visits = len(env.registry) + env.max_steps * (config.episodes + rollouts)
    if expert is not None:
        visits += config.expert_passes * len(expert.actions)
    try:
        tree = space_size(env.n_actions, env.max_steps).bound
    except ConfigurationError:
        return visits
    return min(tree, visits)


class DQNAgent:
    """Policy network, replay buffer and schedule of a DQN run."""

    def __init__(
        self,
        env: CircuitEnv,
        config: DQNConfig,
        rng: np.random.Generator,
        input_dim: int,
    ) -> None:
        self.env = env
        self.config = config
        self.rng = rng
        self.net = PolicyNet(
            input_dim,
            env.n_actions,
            config.hidden,
            rng=rng,
            encoding=config.state_encoding,
        )
        self.buffer = ReplayBuffer(config.buffer_capacity)
        self.train_steps = 0

    def q_values(self, state_index: int) -> np.ndarray:
        return net_forward(
            self.net, encode_states(self.env, [state_index], self.net.encoding)[0]
        )

    def act(self, state_index: int, epsilon: float) -> int:
        if self.rng.random() < epsilon:
            return int(self.rng.integers(self.env.n_actions))
        return greedy_choice(self.q_values(state_index), self.rng)

    def replay(self) -> float | None:
        """One training step on a uniformly sampled batch, once enough is stored."""
        if len(self.buffer) < self.config.batch_size:
            return None
        batch = self.buffer.sample(self.config.batch_size, self.rng)
        if self.net.encoding != "one_hot":
            batch = batch._replace(
                state=encode_states(self.env, batch.state, self.net.encoding),
                next_state=encode_states(self.env, batch.next_state, self.net.encoding),
            )
        self.train_steps += 1
        return net_train_step(
            self.net,
            batch,
            self.config.gamma,
            self.config.learning_rate,
            self.config.max_grad_norm,
        )

    def update_target(self) -> None:
        if self.config.target_mode == "hard":
            self.net.update_target("hard")
        else:
            self.net.update_target("soft", self.config.soft_tau)

    def replay_expert(self, expert: ExpertTrajectory) -> None:
        """Push every expert transition followed by a training step, per pass."""
        for expert_pass in range(self.config.expert_passes):
            state = self.env.reset()
            reward = 0.0
            for action in expert.actions:
                action_index = self.env.action_index(action)
                next_state, reward, done = self.env.step(action_index)
                self.buffer.push(state, action_index, reward, next_state, done)
                self.replay()
                state = next_state
                if done:
                    break
            if expert_pass == 0 and reward <= 0:
                warn(ExpertTrajectoryWarning())
            self.update_target()
        LOGGER.debug("Replayed expert trajectory %d times", self.config.expert_passes)


def train_dqn(
    env: CircuitEnv,
    config: DQNConfig,
    expert: ExpertTrajectory | None = None,
    rng: np.random.Generator | None = None,
    rollouts: int = 1,
) -> tuple[DQNAgent, list[EpisodeTrace]]:
    """Train a DQN agent on `env`.

    Every step pushes its transition and performs one training step on a batch
    sampled from the buffer. The target network is updated every `target_every`
    episodes (hard) or after every episode (soft).

    Parameters:
        env: The environment.
        config: Hyper-parameters.
        expert: Optional expert trajectory replayed `expert_passes` times first.
        rng: Random number generator; a fresh unseeded one if `None`.
        rollouts: Test rollouts planned after training; sizes the one-hot input.

    Returns:
        The trained agent (its `net` holds the policy and target networks) and one
        trace per training episode.

    """
    rng = rng if rng is not None else np.random.default_rng()
    if config.state_encoding == "one_hot":
        input_dim = config.input_dim or one_hot_input_dim(env, config, expert, rollouts)
    else:
        input_dim = 2 * env.value_of(0).size
    agent = DQNAgent(env, config, rng, input_dim)

    if expert is not None:
        agent.replay_expert(expert)

    traces = []
    epsilon = config.epsilon
    for episode in range(config.episodes):
        state = env.reset()
        total_reward, steps, done, reward = 0.0, 0, False, 0.0
        while not done and steps < config.max_steps:
            action = agent.act(state, epsilon)
            next_state, reward, done = env.step(action)
            agent.buffer.push(state, action, reward, next_state, done)
            agent.replay()
            state = next_state
            total_reward += reward
            steps += 1

        if config.target_mode == "soft" or (episode + 1) % config.target_every == 0:
            agent.update_target()
        traces.append(
            EpisodeTrace(
                episode=episode,
                steps=steps,
                total_reward=total_reward,
                success=reward > 0,
                epsilon=epsilon,
            )
        )
        epsilon = max(config.epsilon_min, epsilon * config.epsilon_decay)

    LOGGER.info(
        "DQN finished: %d episodes, %d successful, %d training steps, %d states",
        config.episodes,
        sum(_.success for _ in traces),
        agent.train_steps,
        len(env.registry),
    )
    return agent, traces
