"""
Pydantic models

All pydantic data models and settings used throughout the engine can be found in
this module.
"""

from __future__ import annotations

from .actions import ActionSpec, Representation, RewardMode, RewardRule
from .agents import DQNConfig, EpisodeTrace, QLearnConfig
from .bench import (
    Algorithm,
    BenchReport,
    ExperimentConfig,
    Preset,
    RoundResult,
    WalkthroughResult,
)
from .gates import BaseGate, GateName, GatePlacement
from .manifest import RunManifest
from .tasks import (
    CatalogEntry,
    ExpertTrajectory,
    IdentityCheck,
    SpaceSizeReport,
    TaskSpec,
)

__all__ = (
    "ActionSpec",
    "Algorithm",
    "BaseGate",
    "BenchReport",
    "CatalogEntry",
    "DQNConfig",
    "EpisodeTrace",
    "ExperimentConfig",
    "ExpertTrajectory",
    "GateName",
    "GatePlacement",
    "IdentityCheck",
    "Preset",
    "QLearnConfig",
    "Representation",
    "RewardMode",
    "RewardRule",
    "RoundResult",
    "RunManifest",
    "SpaceSizeReport",
    "TaskSpec",
    "WalkthroughResult",
)
