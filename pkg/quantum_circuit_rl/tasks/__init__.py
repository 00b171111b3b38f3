"""The benchmark tasks, their action sets and the identity suite."""

from __future__ import annotations

from .catalog import (
    TASK_NAMES,
    action_set,
    expert_trajectory,
    get_task,
    task_catalog,
)
from .space import space_size

__all__ = (
    "TASK_NAMES",
    "action_set",
    "expert_trajectory",
    "get_task",
    "space_size",
    "task_catalog",
)
