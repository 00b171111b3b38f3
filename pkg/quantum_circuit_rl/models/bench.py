"""Pydantic models/schemas for experiment configuration and benchmark records."""

from __future__ import annotations

from enum import Enum
from typing import Annotated, Any, Literal

from pydantic import BaseModel, Field, model_validator
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)

from quantum_circuit_rl.models.actions import Representation


class Algorithm(Enum):
    """Benchmark algorithms: a learner paired with an MDP representation."""

    QLEARN = "qlearn"
    QLEARN_REVERSE = "qlearn_reverse"
    DQN = "dqn"
    DQN_REVERSE = "dqn_reverse"
    QLEARN_TN = "qlearn_tn"

    @property
    def representation(self) -> Representation:
        if self is Algorithm.QLEARN_TN:
            return Representation.TN
        if self in (Algorithm.QLEARN_REVERSE, Algorithm.DQN_REVERSE):
            return Representation.REVERSE
        return Representation.MATRIX

    @property
    def learner(self) -> Literal["qlearn", "dqn"]:
        return "dqn" if self in (Algorithm.DQN, Algorithm.DQN_REVERSE) else "qlearn"

    @property
    def title(self) -> str:
        """Column title used in rendered tables."""
        return {
            Algorithm.QLEARN: "Q-Learning",
            Algorithm.QLEARN_REVERSE: "Q-Learning (Rev)",
            Algorithm.DQN: "DQN",
            Algorithm.DQN_REVERSE: "DQN (Rev)",
            Algorithm.QLEARN_TN: "Q-Learning (TN)",
        }[self]


class Preset(Enum):
    """Named hyper-parameter presets."""

    SECTION3 = "section3"
    APPENDIX = "appendix"


class ExperimentConfig(BaseSettings):
    """Configuration of a single training run or benchmark cell.

    Values come from keyword arguments and, optionally, a plain `key=value` file
    passed as `_env_file`. Keyword arguments take precedence over the file and
    any unset hyper-parameter falls back to the selected preset. Environment
    variables are not consulted.
    """

    model_config = SettingsConfigDict(extra="forbid", case_sensitive=False)

    task: Annotated[str, Field(description="Task name, e.g., `bell_phi_plus`.")]
    algorithm: Annotated[Algorithm, Field(description="Learner and representation.")]
    preset: Preset = Preset.APPENDIX
    rounds: Annotated[int, Field(ge=1, description="Independent rounds.")] = 100
    episodes: Annotated[
        int | None, Field(ge=0, description="Training episodes per round.")
    ] = None
    max_steps: Annotated[int, Field(ge=1, description="Episode step limit.")] = 20
    seed: Annotated[int, Field(ge=0, description="Base seed for all rounds.")] = 0
    workers: Annotated[int, Field(ge=1, description="Worker processes.")] = 1
    rollouts: Annotated[
        int, Field(ge=1, description="Greedy rollouts per round; any success counts.")
    ] = 1
    use_expert: Annotated[
        bool, Field(description="Inject the task's expert trajectory, if defined.")
    ] = True
    walkthrough: Annotated[
        bool,
        Field(description="Use the small demonstration action sets of the Bell task."),
    ] = False
    state_cap: Annotated[int | None, Field(ge=1)] = None

    # Hyper-parameter overrides; `None` keeps the preset value.
    alpha: Annotated[float | None, Field(gt=0, le=1)] = None
    gamma: Annotated[float | None, Field(ge=0, lt=1)] = None
    epsilon: Annotated[float | None, Field(ge=0, le=1)] = None
    epsilon_decay: Annotated[float | None, Field(gt=0, le=1)] = None
    epsilon_min: Annotated[float | None, Field(ge=0, le=1)] = None
    learning_rate: Annotated[float | None, Field(gt=0)] = None
    batch_size: Annotated[int | None, Field(ge=1)] = None
    buffer_capacity: Annotated[int | None, Field(ge=1)] = None
    target_mode: Literal["hard", "soft"] | None = None
    target_every: Annotated[int | None, Field(ge=1)] = None
    soft_tau: Annotated[float | None, Field(ge=0, le=1)] = None
    expert_passes: Annotated[int | None, Field(ge=0)] = None
    state_encoding: Literal["one_hot", "matrix"] | None = None
    max_grad_norm: Annotated[float | None, Field(gt=0)] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],  # noqa: ARG003
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,  # noqa: ARG003
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,  # noqa: ARG003
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return init_settings, dotenv_settings

    @property
    def representation(self) -> Representation:
        return self.algorithm.representation

    def snapshot(self) -> dict[str, Any]:
        """JSON-friendly dump of the explicitly meaningful values."""
        return self.model_dump(mode="json", exclude_none=True)


class RoundResult(BaseModel):
    """Outcome of one independently seeded training + testing round."""

    round_index: Annotated[int, Field(ge=0)]
    trained_episodes: Annotated[int, Field(ge=0)]
    success: bool
    greedy_trajectory: Annotated[
        list[str], Field(description="Action labels of the (best) greedy rollout.")
    ]
    circuit: Annotated[
        list[str], Field(description="Gate labels of the synthesized circuit.")
    ] = []  # noqa: RUF012
    wall_time: Annotated[float, Field(ge=0, description="Seconds.")] = 0.0


class BenchReport(BaseModel):
    """Aggregated success ratio of one (task, algorithm) cell."""

    task: str
    algorithm: Algorithm
    rounds: Annotated[int, Field(ge=0, description="Completed rounds.")]
    successes: Annotated[int, Field(ge=0)]
    ratio: Annotated[float, Field(ge=0, le=100, description="Percentage.")]
    config: dict[str, Any]
    seed: int
    failed_rounds: list[int] = []  # noqa: RUF012
    errors: list[str] = []  # noqa: RUF012

    @model_validator(mode="after")
    def ratio_matches_counts(self) -> BenchReport:
        """`ratio` must equal `100 * successes / rounds`."""
        if self.successes > self.rounds:
            raise ValueError("successes cannot exceed rounds")
        expected = 100.0 * self.successes / self.rounds if self.rounds else 0.0
        if abs(self.ratio - expected) > 1e-9:
            raise ValueError(f"ratio should be {expected}, got {self.ratio}")
        return self

    @property
    def complete(self) -> bool:
        return not self.failed_rounds


class WalkthroughResult(BaseModel):
    """Learned Q-table and greedy path of a demonstration run."""

    which: Literal["table1", "table2", "table3"]
    representation: Representation
    action_labels: list[str]
    q_table: list[list[float]]
    path: list[str]
    path_values: Annotated[
        list[float], Field(description="Q-value of each action taken along the path.")
    ]
    success: bool
