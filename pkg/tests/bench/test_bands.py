"""Success-ratio bands of full-size benchmark cells.

These train 100 rounds per cell and are deselected by default; run them with
`pytest -m slow`.
"""

from __future__ import annotations

import pytest

pytestmark = [
    pytest.mark.slow,
    pytest.mark.filterwarnings("ignore::DeprecationWarning"),
]


@pytest.mark.parametrize(
    ("task", "algorithm", "low", "high"),
    [
        ("bell_phi_plus", "qlearn_tn", 100.0, 100.0),
        ("bell_phi_plus", "qlearn", 60.0, 100.0),
        ("cz", "qlearn", 50.0, 100.0),
        ("toffoli", "qlearn", 70.0, 100.0),
        ("toffoli", "qlearn_reverse", 70.0, 100.0),
    ],
)
def test_success_ratio_band(
    task: str, algorithm: str, low: float, high: float
) -> None:
    """Ratios over 100 rounds of 100 episodes fall inside their bands"""
    from quantum_circuit_rl.bench import run_benchmark
    from quantum_circuit_rl.models import ExperimentConfig

    config = ExperimentConfig(
        task=task, algorithm=algorithm, rounds=100, episodes=100, workers=4
    )
    report = run_benchmark(config)
    assert low <= report.ratio <= high


@pytest.mark.parametrize(
    "algorithm", ["qlearn", "qlearn_reverse", "dqn", "dqn_reverse", "qlearn_tn"]
)
def test_iswap_stays_hard(algorithm: str) -> None:
    """iSWAP is rarely synthesized, whichever algorithm is used"""
    from quantum_circuit_rl.bench import cell_defined, run_benchmark
    from quantum_circuit_rl.models import Algorithm, ExperimentConfig

    assert {_.value for _ in Algorithm} == {
        "qlearn", "qlearn_reverse", "dqn", "dqn_reverse", "qlearn_tn"
    }  # fmt: skip
    assert cell_defined("iswap", Algorithm(algorithm))
    config = ExperimentConfig(
        task="iswap", algorithm=algorithm, rounds=100, episodes=100, workers=4
    )
    assert run_benchmark(config).ratio <= 20.0


@pytest.mark.parametrize("algorithm", ["qlearn", "qlearn_reverse"])
def test_toffoli_circuits(algorithm: str) -> None:
    """Every successful Toffoli round emits the seven-gate expert circuit"""
    from quantum_circuit_rl.bench import run_round
    from quantum_circuit_rl.models import ExperimentConfig
    from quantum_circuit_rl.tasks.catalog import TOFFOLI_EXPERT

    config = ExperimentConfig(task="toffoli", algorithm=algorithm, episodes=100)
    for index in range(10):
        result = run_round(config, index)
        if result.success:
            assert tuple(result.circuit) == TOFFOLI_EXPERT


def test_dqn_bell_learns_sometimes() -> None:
    """DQN solves the Bell matrix task in a nonzero fraction of rounds"""
    from quantum_circuit_rl.bench import run_benchmark
    from quantum_circuit_rl.models import ExperimentConfig

    config = ExperimentConfig(
        task="bell_phi_plus", algorithm="dqn", rounds=20, episodes=100, workers=4
    )
    assert run_benchmark(config).successes > 0
