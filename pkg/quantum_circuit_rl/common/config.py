"""Configuration of the synthesis engine."""

from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Annotated
from warnings import warn

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from quantum_circuit_rl.warnings import QuantumCircuitRLWarning


class EngineConfig(BaseSettings):
    """This class stores engine-wide config parameters.

    Every field can be set through an environment variable prefixed with `QCRL_`,
    e.g., `QCRL_OUTPUT_DIR=/tmp/runs`.

    """

    model_config = SettingsConfigDict(env_prefix="QCRL_", extra="ignore")

    output_dir: Annotated[
        Path,
        Field(
            description=(
                "Default directory for reports, Q-tables, network checkpoints and run "
                "manifests. String variables in curly braces are replaced with "
                "environment variables, e.g., `{HOME}/runs`."
            ),
        ),
    ] = Path("runs")

    fingerprint_tol: Annotated[
        float,
        Field(
            description=(
                "Rounding grid used when fingerprinting unitaries and state vectors "
                "for the state registry."
            ),
            gt=0,
        ),
    ] = 1e-6

    unitarity_tol: Annotated[
        float,
        Field(
            description="Frobenius-norm tolerance for unitarity and normalization.",
            gt=0,
        ),
    ] = 1e-10

    reward_threshold: Annotated[
        float,
        Field(
            description="Fidelity that must be exceeded for the success reward.",
            gt=0,
            le=1,
        ),
    ] = 0.99

    success_reward: Annotated[
        float,
        Field(
            description="Reward granted when the fidelity threshold is exceeded.",
            gt=0,
        ),
    ] = 100.0

    max_steps: Annotated[
        int,
        Field(
            description="Default episode step limit (composite actions count once).",
            ge=1,
        ),
    ] = 20

    state_cap: Annotated[
        int | None,
        Field(
            description=(
                "Maximum number of distinct states an environment may register. "
                "`None` means the registry grows without bound."
            ),
            ge=1,
        ),
    ] = None

    workers: Annotated[
        int,
        Field(
            description="Default number of worker processes for benchmark rounds.",
            ge=1,
        ),
    ] = 1

    log_level: Annotated[
        str,
        Field(
            description="Console log level.",
        ),
    ] = "INFO"

    @field_validator("output_dir", mode="before")
    @classmethod
    def replace_with_env_vars(cls, value: str | Path) -> str:
        """Replace string variables with environment variables, if possible"""
        value = str(value)
        res = value
        for match in re.finditer(r"\{[^{}]+\}", value):
            string_var = match.group()[1:-1]
            env_var = os.getenv(
                string_var, os.getenv(string_var.upper(), os.getenv(string_var.lower()))
            )
            if env_var is not None:
                res = res.replace(match.group(), env_var)
            else:
                warn(
                    QuantumCircuitRLWarning(
                        detail=(
                            "Could not find an environment variable for "
                            f"{match.group()!r} from output_dir: {value}"
                        )
                    )
                )
        return res


CONFIG = EngineConfig()
