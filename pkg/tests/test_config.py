"""Tests for common/config.py, common/utils.py and the warnings"""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from pathlib import Path


def test_environment_variables(monkeypatch: pytest.MonkeyPatch) -> None:
    """Fields are read from `QCRL_`-prefixed environment variables"""
    from quantum_circuit_rl.common.config import EngineConfig

    monkeypatch.setenv("QCRL_REWARD_THRESHOLD", "0.95")
    monkeypatch.setenv("QCRL_STATE_CAP", "12")
    config = EngineConfig()
    assert config.reward_threshold == 0.95
    assert config.state_cap == 12
    assert config.success_reward == 100.0


def test_output_dir_variables(monkeypatch: pytest.MonkeyPatch) -> None:
    """Curly-brace variables in `output_dir` are expanded"""
    from pathlib import Path

    from quantum_circuit_rl.common.config import EngineConfig
    from quantum_circuit_rl.warnings import QuantumCircuitRLWarning

    monkeypatch.setenv("QCRL_TEST_ROOT", "/data")
    config = EngineConfig(output_dir="{QCRL_TEST_ROOT}/runs")
    assert config.output_dir == Path("/data/runs")

    monkeypatch.delenv("QCRL_TEST_ROOT")
    with pytest.warns(QuantumCircuitRLWarning, match="QCRL_TEST_ROOT"):
        EngineConfig(output_dir="{QCRL_TEST_ROOT}/runs")


def test_invalid_values(monkeypatch: pytest.MonkeyPatch) -> None:
    """Out-of-range settings are rejected"""
    from pydantic import ValidationError

    from quantum_circuit_rl.common.config import EngineConfig

    monkeypatch.setenv("QCRL_REWARD_THRESHOLD", "1.5")
    with pytest.raises(ValidationError):
        EngineConfig()


def test_clean_python_types() -> None:
    """NumPy values, enums, complex numbers and models become JSON types"""
    from pathlib import Path

    import numpy as np

    from quantum_circuit_rl.common.utils import clean_python_types
    from quantum_circuit_rl.models import IdentityCheck, Representation

    data = {
        "array": np.arange(3),
        "scalar": np.float64(0.5),
        "phase": 1j,
        "enum": Representation.TN,
        "path": Path("runs"),
        "checks": (IdentityCheck(name="x", passed=True),),
    }
    assert clean_python_types(data) == {
        "array": [0, 1, 2],
        "scalar": 0.5,
        "phase": [0.0, 1.0],
        "enum": "tn",
        "path": "runs",
        "checks": [{"name": "x", "passed": True, "value": None, "detail": ""}],
    }


def test_warning_detail() -> None:
    """Warnings carry their detail, or fall back to the class docstring"""
    from quantum_circuit_rl.warnings import ExpertTrajectoryWarning

    assert str(ExpertTrajectoryWarning(detail="custom")) == "custom"
    assert "expert trajectory" in str(ExpertTrajectoryWarning())


def test_manifest_round_trip(tmp_path: Path) -> None:
    """A written manifest, timestamp included, loads back unchanged"""
    from quantum_circuit_rl.common.utils import write_json
    from quantum_circuit_rl.models import RunManifest

    manifest = RunManifest(
        command="train", config={"task": "bell_phi_plus"}, seed=0
    )
    path = write_json(tmp_path / "manifest.json", manifest)
    loaded = RunManifest.model_validate_json(path.read_text(encoding="utf8"))
    assert loaded == manifest
    assert loaded.timestamp.tzinfo is not None
