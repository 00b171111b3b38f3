"""Pydantic model for the run manifest written next to every artifact."""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Annotated, Any

from pydantic import BaseModel, Field

from quantum_circuit_rl import __version__


class RunManifest(BaseModel):
    """Everything needed to reproduce a run: effective configuration and seed."""

    command: Annotated[str, Field(description="CLI subcommand that produced the run.")]
    config: Annotated[dict[str, Any], Field(description="Effective configuration.")]
    seed: int
    artifacts: Annotated[
        dict[str, str],
        Field(description="Artifact kind (e.g., `qtable`, `report`) to file path."),
    ] = {}  # noqa: RUF012
    version: str = __version__
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))
