"""Tests for bench/walkthrough.py"""

from __future__ import annotations

import pytest

WALKTHROUGH_PATHS = [
    ("table1", ["H0", "CNOT01"], [90.0, 100.0]),
    ("table2", ["CNOT01^-1", "H0^-1"], [90.0, 100.0]),
    ("table3", ["(H0, CNOT01)"], [100.0]),
]


@pytest.mark.parametrize(("which", "path", "values"), WALKTHROUGH_PATHS)
def test_reproduce_walkthrough(
    which: str, path: list[str], values: list[float]
) -> None:
    """The learned tables value the optimal path at `gamma^k * 100`"""
    from quantum_circuit_rl.bench import reproduce_walkthrough

    result = reproduce_walkthrough(which, seed=3)  # type: ignore[arg-type]

    assert result.success
    assert result.path == path
    assert result.path_values == pytest.approx(values, rel=1e-3)
    assert len(result.q_table[0]) == len(result.action_labels)
    assert len(result.q_table) > len(path)


@pytest.mark.parametrize(
    ("which", "tree_size"), [("table1", 31), ("table2", 31), ("table3", 18)]
)
def test_walkthrough_rows_cover_the_tree(which: str, tree_size: int) -> None:
    """Every distinct state of the demonstration tree has a row, visited or not"""
    from quantum_circuit_rl.bench import WALKTHROUGHS, reproduce_walkthrough
    from quantum_circuit_rl.envs import explore, make_env

    representation, depth = WALKTHROUGHS[which]
    env = make_env("bell_phi_plus", representation, depth, walkthrough=True)
    distinct = explore(env, depth)

    for episodes in (0, 500):
        result = reproduce_walkthrough(
            which, seed=5, episodes=episodes  # type: ignore[arg-type]
        )
        assert len(result.q_table) == distinct
    assert len(result.path) < distinct <= tree_size


@pytest.mark.slow
@pytest.mark.parametrize(("which", "path", "values"), WALKTHROUGH_PATHS)
def test_walkthrough_seed_band(
    which: str, path: list[str], values: list[float]
) -> None:
    """At least 19 of 20 seeds learn the optimal path with its discounted values"""
    from quantum_circuit_rl.bench import reproduce_walkthrough

    in_band = 0
    for seed in range(20):
        result = reproduce_walkthrough(which, seed=seed)  # type: ignore[arg-type]
        if (
            result.success
            and result.path == path
            and all(
                expected - 1.0 <= value <= expected
                for value, expected in zip(result.path_values, values)
            )
        ):
            in_band += 1
    assert in_band >= 19


def test_walkthrough_sizes() -> None:
    """Tables have one column per demonstration action"""
    from quantum_circuit_rl.bench import reproduce_walkthrough

    result = reproduce_walkthrough("table3", seed=0, episodes=50)
    assert result.representation.value == "tn"
    assert len(result.action_labels) == 17

    result = reproduce_walkthrough("table1", seed=0, episodes=0)
    assert result.action_labels == ["H0", "H1", "T0", "T1", "CNOT01"]
    assert result.path_values == [0.0] * len(result.path)


def test_unknown_walkthrough() -> None:
    """Only the three demonstrations exist"""
    from quantum_circuit_rl.bench import reproduce_walkthrough
    from quantum_circuit_rl.common.exceptions import ConfigurationError

    with pytest.raises(ConfigurationError, match="table1"):
        reproduce_walkthrough("table4")  # type: ignore[arg-type]
