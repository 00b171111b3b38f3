"""Command-line interface."""

from __future__ import annotations

import argparse
import json
import sys
from os import getenv
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
from pydantic import ValidationError

from quantum_circuit_rl import __version__
from quantum_circuit_rl.agents import PolicyNet, QTable, best_of_rollouts
from quantum_circuit_rl.bench import (
    build_env,
    cell_defined,
    render_table,
    reproduce_walkthrough,
    round_seed,
    run_benchmark,
    write_reports,
)
from quantum_circuit_rl.bench.rounds import train_agent
from quantum_circuit_rl.common.config import CONFIG
from quantum_circuit_rl.common.exceptions import (
    BenchmarkError,
    ConfigurationError,
    QuantumCircuitRLError,
    VerificationError,
)
from quantum_circuit_rl.common.logger import LOGGER, disable_logging
from quantum_circuit_rl.common.utils import clean_python_types, write_json, write_jsonl
from quantum_circuit_rl.envs import StateRegistry, circuit_from_trajectory
from quantum_circuit_rl.gatealg import override_gate
from quantum_circuit_rl.models import (
    Algorithm,
    ExperimentConfig,
    Preset,
    RunManifest,
)
from quantum_circuit_rl.tasks import TASK_NAMES, task_catalog
from quantum_circuit_rl.tasks.verify import (
    corrupted_gate_matrix,
    require_identities,
    verify_identities,
)

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Sequence
    from typing import Any

    from quantum_circuit_rl.agents.rollout import Agent
    from quantum_circuit_rl.envs import CircuitEnv
    from quantum_circuit_rl.models import ActionSpec, BenchReport

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2
EXIT_VERIFICATION = 3

ALL = "all"


def _experiment(args: argparse.Namespace, **values: Any) -> ExperimentConfig:
    """Effective configuration: flags, then the `--config` file, then the preset."""
    flags = {
        "preset": args.preset,
        "seed": args.seed,
        "episodes": args.episodes,
        "max_steps": args.max_steps,
        "rollouts": args.rollouts,
        "use_expert": False if args.no_expert else None,
        **values,
    }
    if args.config is not None and not args.config.is_file():
        raise ConfigurationError(f"Config file {args.config} does not exist")
    return ExperimentConfig(
        _env_file=args.config,  # type: ignore[call-arg]
        **{key: value for key, value in flags.items() if value is not None},
    )


def _circuit_text(trajectory: list[ActionSpec], config: ExperimentConfig) -> str:
    circuit = circuit_from_trajectory(trajectory, config.representation)
    return ", ".join(_.label for _ in circuit)


def _report_rollout(
    success: bool, trajectory: list[ActionSpec], config: ExperimentConfig
) -> None:
    if success:
        print(_circuit_text(trajectory, config))
    else:
        print(
            f"No circuit found for {config.task} within {config.max_steps} steps "
            f"(greedy path: {', '.join(_.label for _ in trajectory)})"
        )


def _save_agent(agent: Agent, env: CircuitEnv, run_dir: Path) -> dict[str, Path]:
    if isinstance(agent, QTable):
        path = run_dir / "qtable.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(agent.to_json(env.registry.keys_hex()), encoding="utf8")
        LOGGER.info("Wrote %s", path)
        return {"qtable": path}
    return {
        "network": agent.net.save(run_dir / "network.npz"),
        "registry": write_json(run_dir / "registry.json", env.registry.keys_hex()),
    }


def _write_manifest(
    run_dir: Path,
    command: str,
    config: dict[str, Any],
    seed: int,
    artifacts: dict[str, Path],
) -> Path:
    manifest = RunManifest(
        command=command,
        config=config,
        seed=seed,
        artifacts={kind: str(path) for kind, path in artifacts.items()},
    )
    return write_json(run_dir / "manifest.json", manifest)


def cmd_train(args: argparse.Namespace) -> int:
    """Train one agent, save it next to a manifest and print the greedy circuit."""
    config = _experiment(
        args,
        task=args.task,
        algorithm=args.algorithm,
        walkthrough=args.walkthrough or None,
    )
    env = build_env(config)
    rng = np.random.default_rng(round_seed(config.seed, 0))
    agent, traces = train_agent(config, env, rng)
    success, trajectory = best_of_rollouts(agent, env, config.rollouts, rng)

    run_dir = args.out / f"train-{config.task}-{config.algorithm.value}-{config.seed}"
    artifacts = _save_agent(agent, env, run_dir)
    artifacts["traces"] = write_jsonl(run_dir / "traces.jsonl", traces)
    _write_manifest(run_dir, "train", config.snapshot(), config.seed, artifacts)

    _report_rollout(success, trajectory, config)
    return EXIT_OK


def _cells(args: argparse.Namespace) -> list[tuple[str, Algorithm]]:
    tasks = TASK_NAMES if args.task == ALL else (args.task,)
    algorithms = list(Algorithm)
    if args.algorithm != ALL:
        algorithms = [Algorithm(args.algorithm)]
    explicit = args.task != ALL and args.algorithm != ALL
    return [
        (task, algorithm)
        for task in tasks
        for algorithm in algorithms
        if explicit or cell_defined(task, algorithm)
    ]


def cmd_bench(args: argparse.Namespace) -> int:
    """Run the benchmark for every requested (task, algorithm) cell."""
    configs = [
        _experiment(
            args,
            task=task,
            algorithm=algorithm,
            rounds=args.rounds,
            workers=args.workers,
        )
        for task, algorithm in _cells(args)
    ]

    run_dir = args.out / f"bench-{args.task}-{args.algorithm}-{configs[0].seed}"
    reports: list[BenchReport] = []
    failed = []
    artifacts: dict[str, Path] = {}
    for config in configs:
        traces = (
            run_dir / f"rounds-{config.task}-{config.algorithm.value}.jsonl"
            if args.traces
            else None
        )
        cell = f"{config.task}/{config.algorithm.value}"
        try:
            reports.append(run_benchmark(config, traces))
        except BenchmarkError as exc:
            failed.append(cell)
            if exc.partial is not None:
                reports.append(exc.partial)
        if traces is not None:
            artifacts[f"rounds:{cell}"] = traces

    artifacts.update(write_reports(reports, run_dir))
    _write_manifest(
        run_dir,
        "bench",
        {"cells": [_.config for _ in reports]},
        configs[0].seed,
        artifacts,
    )

    if args.json:
        print(json.dumps(clean_python_types(reports), indent=2, sort_keys=True))
    else:
        print(render_table(reports))
    if failed:
        print(f"Failed cells: {', '.join(failed)}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the circuit identity suite; optionally with a corrupted gate."""
    if args.corrupt:
        matrix = corrupted_gate_matrix(args.corrupt)
        with override_gate(args.corrupt, matrix), disable_logging():
            checks = verify_identities()
    else:
        checks = verify_identities()

    if args.json:
        print(json.dumps(clean_python_types(checks), indent=2))
    else:
        for check in checks:
            value = "" if check.value is None else f"{check.value:.3e}"
            status = "PASS" if check.passed else "FAIL"
            print(f"{status}  {check.name:<34} {value:>10}  {check.detail}".rstrip())

    require_identities(checks)
    return EXIT_OK


def cmd_tasks(args: argparse.Namespace) -> int:
    """List the benchmark tasks."""
    rows = task_catalog()
    if args.json:
        print(json.dumps(clean_python_types(rows), indent=2))
        return EXIT_OK
    header = ("Task", "Qubits", "Actions", "Length", "Space size", "Gate set")
    lines = [
        header,
        *(
            (
                row.name,
                str(row.qubits),
                str(row.actions),
                str(row.length),
                str(row.space_size),
                ", ".join(row.gate_set),
            )
            for row in rows
        ),
    ]
    widths = [max(len(line[col]) for line in lines) for col in range(len(header))]
    for line in lines:
        cells = (cell.ljust(width) for cell, width in zip(line, widths))
        print("  ".join(cells).rstrip())
    return EXIT_OK


def cmd_show_qtable(args: argparse.Namespace) -> int:
    """Print an exported Q-table or reproduce a demonstration table."""
    if args.walkthrough:
        result = reproduce_walkthrough(args.walkthrough, args.seed, args.episodes)
        if args.json:
            print(result.model_dump_json(indent=2))
            return EXIT_OK
        table = QTable(len(result.action_labels), result.action_labels)
        for index, values in enumerate(result.q_table):
            table.row(index)[:] = values
        print(table.to_text())
        path = ", ".join(
            f"{label} ({value:.2f})"
            for label, value in zip(result.path, result.path_values)
        )
        print(f"Greedy path: {path}")
        return EXIT_OK

    if args.path is None:
        raise ConfigurationError("Give a Q-table file or --walkthrough")
    path = args.path / "qtable.json" if args.path.is_dir() else args.path
    table = QTable.from_json(path.read_text(encoding="utf8"))
    print(table.values.tolist() if args.json else table.to_text())
    return EXIT_OK


def _load_agent(manifest: RunManifest, env: CircuitEnv) -> Agent:
    artifacts = {kind: Path(path) for kind, path in manifest.artifacts.items()}
    cap = env.registry.cap
    if "qtable" in artifacts:
        text = artifacts["qtable"].read_text(encoding="utf8")
        keys = json.loads(text).get("registry", [])
        env.restore_registry(StateRegistry.from_hex(keys, cap=cap))
        return QTable.from_json(text)
    if "network" in artifacts:
        keys = json.loads(artifacts["registry"].read_text(encoding="utf8"))
        env.restore_registry(StateRegistry.from_hex(keys, cap=cap))
        return PolicyNet.load(artifacts["network"])
    raise ConfigurationError("The manifest references no Q-table or network")


def cmd_rollout(args: argparse.Namespace) -> int:
    """Greedy rollout of an agent saved by `train`."""
    manifest_path = args.run / "manifest.json" if args.run.is_dir() else args.run
    manifest = RunManifest.model_validate_json(manifest_path.read_text(encoding="utf8"))
    if manifest.command != "train":
        raise ConfigurationError(f"{manifest_path} was not written by `train`")
    config = ExperimentConfig(**manifest.config)
    env = build_env(config)
    agent = _load_agent(manifest, env)
    rng = np.random.default_rng(config.seed if args.seed is None else args.seed)
    success, trajectory = best_of_rollouts(
        agent, env, args.rollouts or config.rollouts, rng
    )
    _report_rollout(success, trajectory, config)
    return EXIT_OK


def _add_experiment_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--preset",
        choices=[_.value for _ in Preset],
        help="Hyper-parameter preset (default: appendix).",
    )
    parser.add_argument("--seed", type=int, help="Base seed (default: 0).")
    parser.add_argument("--episodes", type=int, help="Training episodes.")
    parser.add_argument("--max-steps", type=int, help="Episode step limit.")
    parser.add_argument("--rollouts", type=int, help="Greedy test rollouts.")
    parser.add_argument(
        "--no-expert",
        action="store_true",
        help="Do not inject the task's expert trajectory.",
    )
    parser.add_argument(
        "--config",
        type=Path,
        help="Plain-text key=value file with experiment settings.",
    )
    parser.add_argument(
        "--out",
        type=Path,
        default=CONFIG.output_dir,
        help="Output directory (QCRL_OUTPUT_DIR).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        "quantum-circuit-rl",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        description="Quantum circuit synthesis with reinforcement learning.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    algorithms = [_.value for _ in Algorithm]

    train = subparsers.add_parser("train", help=cmd_train.__doc__)
    train.add_argument("task", choices=TASK_NAMES)
    train.add_argument("algorithm", choices=algorithms)
    train.add_argument(
        "--walkthrough",
        action="store_true",
        help="Use the small demonstration action set (bell_phi_plus only).",
    )
    _add_experiment_arguments(train)
    train.set_defaults(func=cmd_train)

    bench = subparsers.add_parser("bench", help=cmd_bench.__doc__)
    bench.add_argument("task", choices=[ALL, *TASK_NAMES])
    bench.add_argument("algorithm", choices=[ALL, *algorithms])
    bench.add_argument("--rounds", type=int, help="Rounds per cell (default: 100).")
    bench.add_argument(
        "--workers", type=int, default=CONFIG.workers, help="Worker processes."
    )
    bench.add_argument(
        "--traces", action="store_true", help="Write one JSON line per round."
    )
    bench.add_argument("--json", action="store_true", help="Print JSON records.")
    _add_experiment_arguments(bench)
    bench.set_defaults(func=cmd_bench)

    verify = subparsers.add_parser("verify", help=cmd_verify.__doc__)
    verify.add_argument(
        "--corrupt",
        metavar="GATE",
        help="Add a phase to GATE while verifying; every dependent check must fail.",
    )
    verify.add_argument("--json", action="store_true", help="Print JSON records.")
    verify.set_defaults(func=cmd_verify)

    tasks = subparsers.add_parser("tasks", help=cmd_tasks.__doc__)
    tasks.add_argument("--json", action="store_true", help="Print JSON records.")
    tasks.set_defaults(func=cmd_tasks)

    show = subparsers.add_parser("show-qtable", help=cmd_show_qtable.__doc__)
    show.add_argument(
        "path", type=Path, nargs="?", help="Exported Q-table or `train` directory."
    )
    show.add_argument(
        "--walkthrough",
        choices=["table1", "table2", "table3"],
        help="Reproduce a demonstration table instead.",
    )
    show.add_argument("--seed", type=int, default=0)
    show.add_argument("--episodes", type=int, default=500)
    show.add_argument("--json", action="store_true", help="Print JSON.")
    show.set_defaults(func=cmd_show_qtable)

    rollout = subparsers.add_parser("rollout", help=cmd_rollout.__doc__)
    rollout.add_argument("run", type=Path, help="`train` directory or its manifest.")
    rollout.add_argument("--seed", type=int, help="Rollout seed (default: run seed).")
    rollout.add_argument("--rollouts", type=int, help="Greedy rollouts.")
    rollout.set_defaults(func=cmd_rollout)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run the `quantum-circuit-rl` command line.

    Returns:
        `0` on success, `1` for invalid input, `2` for runtime failures and `3`
        when the identity suite fails.

    """
    try:
        args = build_parser().parse_args(args=argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_VALIDATION
    try:
        return args.func(args)
    except (ConfigurationError, ValidationError) as exc:
        print(f"Invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except VerificationError as exc:
        print(exc, file=sys.stderr)
        return EXIT_VERIFICATION
    except (QuantumCircuitRLError, OSError) as exc:
        LOGGER.error("%s failed: %r", args.command, exc)
        print(f"{args.command} failed: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
