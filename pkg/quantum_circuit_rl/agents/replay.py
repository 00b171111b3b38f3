"""Experience replay."""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

import numpy as np


class Transition(NamedTuple):
    """A transition, or a batch of them when the fields are arrays.

    `state` and `next_state` hold state indices, or encoded rows once a batch has
    been prepared for a network.
    """

    state: np.ndarray
    action: np.ndarray
    reward: np.ndarray
    next_state: np.ndarray
    done: np.ndarray


class ReplayBuffer:
    """Fixed-size buffer evicting the oldest transitions first."""

    def __init__(self, capacity: int) -> None:
        self.capacity = capacity
        self.memory: deque[tuple[int, int, float, int, bool]] = deque(maxlen=capacity)

    def __len__(self) -> int:
        return len(self.memory)

    def push(
        self, state: int, action: int, reward: float, next_state: int, done: bool
    ) -> None:
        self.memory.append((state, action, reward, next_state, done))

    def sample(self, batch_size: int, rng: np.random.Generator) -> Transition:
        """Uniformly sample `batch_size` distinct stored transitions."""
        picks = rng.choice(len(self.memory), size=batch_size, replace=False)
        states, actions, rewards, next_states, dones = zip(
            *(self.memory[i] for i in picks)
        )
        return Transition(
            np.asarray(states, dtype=np.int64),
            np.asarray(actions, dtype=np.int64),
            np.asarray(rewards, dtype=float),
            np.asarray(next_states, dtype=np.int64),
            np.asarray(dones, dtype=float),
        )
