"""Tabular Q-learning."""

from __future__ import annotations

import json
from os import getenv
from typing import TYPE_CHECKING
from warnings import warn

import numpy as np

from quantum_circuit_rl.common.logger import LOGGER
from quantum_circuit_rl.models import EpisodeTrace
from quantum_circuit_rl.warnings import ExpertTrajectoryWarning

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from typing import Any

    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import ExpertTrajectory, QLearnConfig


class QTable:
    """Action values, one row per registered state.

    Rows are created (all zeros) the first time a state index is touched.
    """

    def __init__(self, n_actions: int, action_labels: list[str] | None = None) -> None:
        if action_labels is not None and len(action_labels) != n_actions:
            raise ValueError("Need exactly one label per action")
        self.n_actions = n_actions
        self.action_labels = action_labels or [str(_) for _ in range(n_actions)]
        self._values = np.zeros((16, n_actions))
        self._n_rows = 0

    def __len__(self) -> int:
        return self._n_rows

    def _ensure(self, state_index: int) -> None:
        if state_index < self._n_rows:
            return
        if state_index >= len(self._values):
            capacity = max(2 * len(self._values), state_index + 1)
            grown = np.zeros((capacity, self.n_actions))
            grown[: self._n_rows] = self._values[: self._n_rows]
            self._values = grown
        self._n_rows = state_index + 1

    def pad(self, n_rows: int) -> None:
        """Add all-zero rows until the table has at least `n_rows` rows."""
        if n_rows > 0:
            self._ensure(n_rows - 1)

    def row(self, state_index: int) -> np.ndarray:
        """A writeable view of the row of `state_index`."""
        self._ensure(state_index)
        return self._values[state_index]

    def peek(self, state_index: int) -> np.ndarray:
        """Copy of a row; all zeros for states without a row. Never adds rows."""
        if state_index < self._n_rows:
            return self._values[state_index].copy()
        return np.zeros(self.n_actions)

    @property
    def values(self) -> np.ndarray:
        """Copy of all rows as an `(n_rows, n_actions)` array."""
        return self._values[: self._n_rows].copy()

    def to_text(self, precision: int = 2) -> str:
        """Text table with one row per state index and one column per action."""
        header = ["States", *self.action_labels]
        rows = [
            [str(index), *(f"{value:.{precision}f}" for value in row)]
            for index, row in enumerate(self.values)
        ]
        lines = [header, *rows]
        widths = [max(len(line[col]) for line in lines) for col in range(len(header))]
        return "\n".join(
            "  ".join(cell.rjust(width) for cell, width in zip(line, widths))
            for line in lines
        )

    def to_json(self, registry_keys: list[str] | None = None) -> str:
        """JSON document with labels, rows and (optionally) the registry keys."""
        document: dict[str, Any] = {
            "action_labels": self.action_labels,
            "rows": self.values.tolist(),
        }
        if registry_keys is not None:
            document["registry"] = registry_keys
        return json.dumps(document, indent=2)

    @classmethod
    def from_json(cls, data: str) -> QTable:
        document = json.loads(data)
        table = cls(len(document["action_labels"]), list(document["action_labels"]))
        rows = np.asarray(document["rows"], dtype=float).reshape(-1, table.n_actions)
        for index, values in enumerate(rows):
            table.row(index)[:] = values
        return table


def greedy_choice(row: np.ndarray, rng: np.random.Generator) -> int:
    """An argmax of `row`, ties broken uniformly at random."""
    return int(rng.choice(np.flatnonzero(row == row.max())))


def q_choose_action(
    table: QTable, state_index: int, epsilon: float, rng: np.random.Generator
) -> int:
    """Epsilon-greedy action selection.

    With probability `epsilon` a uniformly random action, otherwise an argmax of
    the state's row with ties broken uniformly at random.
    """
    if rng.random() < epsilon:
        return int(rng.integers(table.n_actions))
    return greedy_choice(table.row(state_index), rng)


def q_update(
    table: QTable,
    state: int,
    action: int,
    reward: float,
    next_state: int,
    alpha: float,
    gamma: float,
    done: bool = False,
) -> float:
    """`Q(s,a) <- (1 - alpha) Q(s,a) + alpha (r + gamma max_a' Q(s',a'))`.

    The future term is zero for terminal transitions.

    Returns:
        The new value of `Q(s,a)`.

    """
    future = 0.0 if done else float(table.row(next_state).max())
    row = table.row(state)
    row[action] = (1 - alpha) * row[action] + alpha * (reward + gamma * future)
    return float(row[action])


def replay_expert_q(
    env: CircuitEnv,
    table: QTable,
    expert: ExpertTrajectory,
    alpha: float,
    gamma: float,
) -> None:
    """Run the expert trajectory `repeat_count` times.

    Transitions of a pass are applied with `q_update()`, in order, once the pass
    is over.
    """
    for expert_pass in range(expert.repeat_count):
        state = env.reset()
        transitions = []
        reward, done = 0.0, False
        for action in expert.actions:
            action_index = env.action_index(action)
            next_state, reward, done = env.step(action_index)
            transitions.append((state, action_index, reward, next_state, done))
            state = next_state
            if done:
                break
        if expert_pass == 0 and reward <= 0:
            warn(ExpertTrajectoryWarning())
        for transition in transitions:
            q_update(table, *transition[:4], alpha, gamma, done=transition[4])
    LOGGER.debug("Replayed expert trajectory %d times", expert.repeat_count)


def train_q(
    env: CircuitEnv,
    config: QLearnConfig,
    expert: ExpertTrajectory | None = None,
    rng: np.random.Generator | None = None,
) -> tuple[QTable, list[EpisodeTrace]]:
    """Train a Q-table on `env`.

    Parameters:
        env: The environment; its registry provides the state indices.
        config: Hyper-parameters. Epsilon decays multiplicatively after every
            episode and is floored at `epsilon_min`.
        expert: Optional expert trajectory replayed before training.
        rng: Random number generator; a fresh unseeded one if `None`.

    Returns:
        The learned table, with one row per registered state, and one trace per
        training episode.

    """
    rng = rng if rng is not None else np.random.default_rng()
    table = QTable(env.n_actions, env.action_labels)
    if expert is not None:
        replay_expert_q(env, table, expert, config.alpha, config.gamma)

    traces = []
    alpha, gamma, epsilon = config.alpha, config.gamma, config.epsilon
    for episode in range(config.episodes):
        state = env.reset()
        total_reward, steps, done, reward = 0.0, 0, False, 0.0
        while not done and steps < config.max_steps:
            action = q_choose_action(table, state, epsilon, rng)
            next_state, reward, done = env.step(action)
            q_update(table, state, action, reward, next_state, alpha, gamma, done)
            state = next_state
            total_reward += reward
            steps += 1
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
        "Q-learning finished: %d episodes, %d successful, %d states registered",
        config.episodes,
        sum(_.success for _ in traces),
        len(env.registry),
    )
    table.pad(len(env.registry))
    return table, traces
