"""Reproduction of the small demonstration Q-tables of the Bell state task."""

from __future__ import annotations

from typing import Literal

import numpy as np

from quantum_circuit_rl.agents import greedy_rollout, train_q
from quantum_circuit_rl.bench.presets import QLEARN_PRESETS
from quantum_circuit_rl.common.exceptions import ConfigurationError
from quantum_circuit_rl.envs import make_env
from quantum_circuit_rl.models import Preset, Representation, WalkthroughResult

Walkthrough = Literal["table1", "table2", "table3"]

WALKTHROUGHS: dict[str, tuple[Representation, int]] = {
    "table1": (Representation.MATRIX, 2),
    "table2": (Representation.REVERSE, 2),
    "table3": (Representation.TN, 1),
}
"""Representation and episode depth of each demonstration."""


def reproduce_walkthrough(
    which: Walkthrough, seed: int = 0, episodes: int = 500
) -> WalkthroughResult:
    """Train the `section3` Q-learning preset on a demonstration environment.

    `table1` uses the five-action matrix environment, `table2` its reverse
    counterpart and `table3` the 17-action tensor-network environment. Episodes
    are capped at the demonstration depth, and the whole demonstration tree is
    registered up front so the table has a row for each of its distinct states.

    Parameters:
        which: The demonstration.
        seed: Seed of the training and rollout RNG.
        episodes: Training episodes.

    Returns:
        The learned table, the greedy path and the value of each action on it.

    Raises:
        ConfigurationError: For an unknown demonstration.

    """
    if which not in WALKTHROUGHS:
        raise ConfigurationError(
            f"Unknown walkthrough {which!r}; choose from {', '.join(WALKTHROUGHS)}"
        )
    representation, depth = WALKTHROUGHS[which]
    env = make_env("bell_phi_plus", representation, depth, walkthrough=True)
    config = QLEARN_PRESETS[Preset.SECTION3].model_copy(
        update={"episodes": episodes, "max_steps": depth}
    )
    env.expand(depth)
    rng = np.random.default_rng(seed)
    table, _ = train_q(env, config, rng=rng)
    success, path = greedy_rollout(table, env, rng=rng)

    path_values = []
    state = env.reset()
    for action in path:
        action_index = env.action_index(action)
        path_values.append(float(table.peek(state)[action_index]))
        state = env.step(action_index).next_index

    return WalkthroughResult(
        which=which,
        representation=representation,
        action_labels=env.action_labels,
        q_table=table.values.tolist(),
        path=[_.label for _ in path],
        path_values=path_values,
        success=success,
    )
