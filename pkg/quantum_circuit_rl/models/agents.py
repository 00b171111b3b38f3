"""Pydantic models/schemas for agent hyper-parameters and training traces."""

from __future__ import annotations

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field


class QLearnConfig(BaseModel):
    """Hyper-parameters for tabular Q-learning."""

    model_config = ConfigDict(frozen=True)

    alpha: Annotated[float, Field(gt=0, le=1, description="Learning rate.")] = 0.1
    gamma: Annotated[float, Field(ge=0, lt=1, description="Discount factor.")] = 0.95
    epsilon: Annotated[
        float, Field(ge=0, le=1, description="Initial exploration rate.")
    ] = 1.0
    epsilon_decay: Annotated[
        float, Field(gt=0, le=1, description="Multiplier applied after each episode.")
    ] = 0.99
    epsilon_min: Annotated[float, Field(ge=0, le=1)] = 0.05
    episodes: Annotated[int, Field(ge=0)] = 100
    max_steps: Annotated[int, Field(ge=1)] = 20


class DQNConfig(BaseModel):
    """Hyper-parameters for the deep Q-network agent."""

    model_config = ConfigDict(frozen=True)

    learning_rate: Annotated[float, Field(gt=0)] = 0.1
    gamma: Annotated[float, Field(ge=0, lt=1)] = 0.95
    epsilon: Annotated[float, Field(ge=0, le=1)] = 0.9
    epsilon_decay: Annotated[float, Field(gt=0, le=1)] = 0.995
    epsilon_min: Annotated[float, Field(ge=0, le=1)] = 0.05
    episodes: Annotated[int, Field(ge=0)] = 100
    max_steps: Annotated[int, Field(ge=1)] = 20
    batch_size: Annotated[int, Field(ge=1)] = 64
    buffer_capacity: Annotated[int, Field(ge=1)] = 10000
    hidden: tuple[int, ...] = (128, 128)
    target_mode: Literal["hard", "soft"] = "hard"
    target_every: Annotated[
        int, Field(ge=1, description="Episodes between target-network updates.")
    ] = 100
    soft_tau: Annotated[float, Field(ge=0, le=1)] = 0.1
    expert_passes: Annotated[int, Field(ge=0)] = 150
    state_encoding: Literal["one_hot", "matrix"] = "one_hot"
    input_dim: Annotated[
        int | None,
        Field(
            ge=1,
            description=(
                "One-hot input width. `None` sizes it from the action count, the step "
                "limit and the training budget."
            ),
        ),
    ] = None
    max_grad_norm: Annotated[
        float | None,
        Field(gt=0, description="Gradient-norm clip of the SGD step; `None` = off."),
    ] = 10.0


class EpisodeTrace(BaseModel):
    """Summary of a single training episode."""

    episode: int
    steps: int
    total_reward: float
    success: bool
    epsilon: float
