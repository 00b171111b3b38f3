"""Hyper-parameter presets and their resolution against experiment overrides."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

from quantum_circuit_rl.models import DQNConfig, Preset, QLearnConfig
from quantum_circuit_rl.tasks import expert_trajectory

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from quantum_circuit_rl.models import ExperimentConfig, ExpertTrajectory, TaskSpec

QLEARN_PRESETS: dict[Preset, QLearnConfig] = {
    # Fixed exploration; reproduces the learned walkthrough tables.
    Preset.SECTION3: QLearnConfig(
        alpha=0.5,
        gamma=0.9,
        epsilon=0.2,
        epsilon_decay=1.0,
        epsilon_min=0.0,
        episodes=500,
    ),
    Preset.APPENDIX: QLearnConfig(
        alpha=0.1,
        gamma=0.95,
        epsilon=1.0,
        epsilon_decay=0.99,
        epsilon_min=0.05,
        episodes=100,
    ),
}

DQN_PRESETS: dict[Preset, DQNConfig] = {
    Preset.SECTION3: DQNConfig(target_mode="soft", soft_tau=0.1),
    Preset.APPENDIX: DQNConfig(target_mode="hard", target_every=100),
}

_QLEARN_OVERRIDES = ("alpha", "gamma", "epsilon", "epsilon_decay", "epsilon_min")
_DQN_OVERRIDES = (
    "gamma",
    "epsilon",
    "epsilon_decay",
    "epsilon_min",
    "learning_rate",
    "batch_size",
    "buffer_capacity",
    "target_mode",
    "target_every",
    "soft_tau",
    "expert_passes",
    "state_encoding",
    "max_grad_norm",
)


def _overrides(
    config: ExperimentConfig, fields: tuple[str, ...]
) -> dict[str, object]:
    values = {
        field: getattr(config, field)
        for field in fields
        if getattr(config, field) is not None
    }
    values["max_steps"] = config.max_steps
    if config.episodes is not None:
        values["episodes"] = config.episodes
    return values


def resolve_qlearn(config: ExperimentConfig) -> QLearnConfig:
    """The preset's Q-learning parameters with the experiment's overrides applied."""
    base = QLEARN_PRESETS[config.preset]
    return QLearnConfig.model_validate(
        {**base.model_dump(), **_overrides(config, _QLEARN_OVERRIDES)}
    )


def resolve_dqn(config: ExperimentConfig) -> DQNConfig:
    """The preset's DQN parameters with the experiment's overrides applied."""
    base = DQN_PRESETS[config.preset]
    return DQNConfig.model_validate(
        {**base.model_dump(), **_overrides(config, _DQN_OVERRIDES)}
    )


def resolve_expert(
    config: ExperimentConfig, task: TaskSpec
) -> ExpertTrajectory | None:
    """The expert trajectory to inject, if the task has one and it is enabled.

    For Q-learning `expert_passes` overrides the number of replays; zero passes
    disables the injection.
    """
    if not config.use_expert or config.expert_passes == 0:
        return None
    expert = expert_trajectory(task, config.representation)
    if (
        expert is not None
        and config.algorithm.learner == "qlearn"
        and config.expert_passes is not None
    ):
        expert = expert.model_copy(update={"repeat_count": config.expert_passes})
    return expert
