"""Independently seeded training rounds and their aggregation."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from os import getenv
from typing import TYPE_CHECKING

import numpy as np

from quantum_circuit_rl.agents import best_of_rollouts, train_dqn, train_q
from quantum_circuit_rl.bench.presets import (
    resolve_dqn,
    resolve_expert,
    resolve_qlearn,
)
from quantum_circuit_rl.common.exceptions import BenchmarkError
from quantum_circuit_rl.common.logger import LOGGER, disable_logging
from quantum_circuit_rl.common.utils import write_jsonl
from quantum_circuit_rl.envs import circuit_from_trajectory, make_env
from quantum_circuit_rl.models import BenchReport, RoundResult
from quantum_circuit_rl.tasks import get_task

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from pathlib import Path

    from quantum_circuit_rl.agents.rollout import Agent
    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import EpisodeTrace, ExperimentConfig


def round_seed(base_seed: int, round_index: int) -> np.random.SeedSequence:
    """Seed of a round; depends only on the base seed and the round index."""
    return np.random.SeedSequence([base_seed, round_index])


def build_env(config: ExperimentConfig) -> CircuitEnv:
    """A fresh environment for `config`.

    Raises:
        ConfigurationError: For undefined task/algorithm combinations.

    """
    return make_env(
        get_task(config.task),
        config.representation,
        config.max_steps,
        walkthrough=config.walkthrough,
        state_cap=config.state_cap,
    )


def train_agent(
    config: ExperimentConfig, env: CircuitEnv, rng: np.random.Generator
) -> tuple[Agent, list[EpisodeTrace]]:
    """Train the learner named by `config.algorithm` on `env`."""
    expert = resolve_expert(config, env.task)
    if config.algorithm.learner == "dqn":
        dqn = resolve_dqn(config)
        return train_dqn(env, dqn, expert, rng, rollouts=config.rollouts)
    return train_q(env, resolve_qlearn(config), expert, rng)


def run_round(config: ExperimentConfig, round_index: int) -> RoundResult:
    """Train a fresh agent in a fresh environment and test it greedily."""
    start = time.perf_counter()
    rng = np.random.default_rng(round_seed(config.seed, round_index))
    env = build_env(config)
    agent, traces = train_agent(config, env, rng)
    success, trajectory = best_of_rollouts(agent, env, config.rollouts, rng)
    circuit = circuit_from_trajectory(trajectory, config.representation)
    return RoundResult(
        round_index=round_index,
        trained_episodes=len(traces),
        success=success,
        greedy_trajectory=[_.label for _ in trajectory],
        circuit=[_.label for _ in circuit] if success else [],
        wall_time=time.perf_counter() - start,
    )


def _quiet_round(config: ExperimentConfig, round_index: int) -> RoundResult:
    with disable_logging():
        return run_round(config, round_index)


def summarize(
    config: ExperimentConfig,
    results: list[RoundResult],
    errors: dict[int, str] | None = None,
) -> BenchReport:
    """Aggregate round results into a report (independent of their order)."""
    errors = errors or {}
    successes = sum(_.success for _ in results)
    return BenchReport(
        task=config.task,
        algorithm=config.algorithm,
        rounds=len(results),
        successes=successes,
        ratio=100.0 * successes / len(results) if results else 0.0,
        config=config.model_dump(mode="json", exclude_none=True, exclude={"workers"}),
        seed=config.seed,
        failed_rounds=sorted(errors),
        errors=[errors[_] for _ in sorted(errors)],
    )


def run_benchmark(
    config: ExperimentConfig, traces_path: Path | None = None
) -> BenchReport:
    """Run `config.rounds` independently seeded rounds and aggregate them.

    Rounds run in `config.workers` processes when more than one worker is
    requested; the outcome does not depend on the number of workers.

    Parameters:
        config: The experiment.
        traces_path: Write one JSON line per round here, if given.

    Returns:
        The aggregated report.

    Raises:
        ConfigurationError: For undefined task/algorithm combinations.
        BenchmarkError: If any round failed; `partial` holds the completed rounds.

    """
    build_env(config)  # validate before spawning workers
    LOGGER.info(
        "Benchmark %s/%s: %d rounds, seed %d, %d worker(s)",
        config.task,
        config.algorithm.value,
        config.rounds,
        config.seed,
        config.workers,
    )

    results: list[RoundResult] = []
    errors: dict[int, str] = {}
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            futures = {
                executor.submit(_quiet_round, config, index): index
                for index in range(config.rounds)
            }
            for future in as_completed(futures):
                try:
                    results.append(future.result())
                except Exception as exc:  # noqa: BLE001
                    errors[futures[future]] = repr(exc)
    else:
        for index in range(config.rounds):
            try:
                results.append(run_round(config, index))
            except Exception as exc:  # noqa: BLE001
                errors[index] = repr(exc)
    results.sort(key=lambda result: result.round_index)

    if traces_path is not None:
        write_jsonl(traces_path, results)

    report = summarize(config, results, errors)
    if errors:
        for index, error in sorted(errors.items()):
            LOGGER.error(
                "Round %d of %s/%s failed: %s",
                index,
                config.task,
                config.algorithm.value,
                error,
            )
        raise BenchmarkError(
            f"{len(errors)} of {config.rounds} rounds failed for "
            f"{config.task}/{config.algorithm.value}",
            partial=report,
        )
    LOGGER.info(
        "Benchmark %s/%s finished: %d/%d successful (%.1f%%)",
        config.task,
        config.algorithm.value,
        report.successes,
        report.rounds,
        report.ratio,
    )
    return report
