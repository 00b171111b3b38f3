"""Pytest fixtures and configuration for all tests"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from collections.abc import Sequence
    from pathlib import Path
    from typing import Protocol

    import numpy as np

    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import TaskSpec

    class RunSteps(Protocol):
        """Protocol for run_steps fixture"""

        def __call__(
            self, env: CircuitEnv, labels: Sequence[str | tuple[str, str]]
        ) -> list[tuple[int, float, bool]]: ...


# PYTEST CONFIGURATION


def pytest_configure(config: pytest.Config):  # noqa: ARG001
    """Allow plugins and conftest files to perform initial configuration.

    Here, we make sure the console logger does not drown the test output.
    """
    import os

    os.environ.setdefault("QCRL_LOG_LEVEL", "WARNING")


# PYTEST FIXTURES


@pytest.fixture(scope="session")
def top_dir() -> Path:
    """Return Path instance for the repository's top (root) directory"""
    from pathlib import Path

    return Path(__file__).parent.parent.resolve()


@pytest.fixture(autouse=True)
def _tmp_output_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Never write run artifacts into the repository"""
    from quantum_circuit_rl.common.config import CONFIG

    output_dir = tmp_path / "runs"
    monkeypatch.setattr(CONFIG, "output_dir", output_dir)
    return output_dir


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded random number generator"""
    import numpy as np

    return np.random.default_rng(1234)


@pytest.fixture
def bell_task() -> TaskSpec:
    """The Bell state (|00> + |11>)/sqrt(2) task"""
    from quantum_circuit_rl.tasks import get_task

    return get_task("bell_phi_plus")


@pytest.fixture
def walkthrough_env(bell_task: TaskSpec) -> CircuitEnv:
    """Five-action matrix environment of the Bell task, capped at two gates"""
    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import Representation

    return CircuitEnv(bell_task, Representation.MATRIX, 2, walkthrough=True)


@pytest.fixture
def run_steps() -> RunSteps:
    """Step an environment through a list of action labels"""
    from quantum_circuit_rl.models import ActionSpec

    def _run_steps(
        env: CircuitEnv, labels: Sequence[str | tuple[str, str]]
    ) -> list[tuple[int, float, bool]]:
        results = []
        for label in labels:
            if isinstance(label, tuple):
                action = ActionSpec.pair(*label)
            elif env.representation.value == "reverse":
                action = ActionSpec.single(label, inverse=True)
            else:
                action = ActionSpec.single(label)
            results.append(tuple(env.step(action)))
        return results

    return _run_steps
