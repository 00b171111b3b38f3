"""Benchmark harness: presets, seeded rounds, reports and demonstrations."""

from __future__ import annotations

from .presets import (
    DQN_PRESETS,
    QLEARN_PRESETS,
    resolve_dqn,
    resolve_expert,
    resolve_qlearn,
)
from .report import cell_defined, format_cell, render_table, write_reports
from .rounds import build_env, round_seed, run_benchmark, run_round, summarize
from .walkthrough import WALKTHROUGHS, reproduce_walkthrough

__all__ = (
    "DQN_PRESETS",
    "QLEARN_PRESETS",
    "WALKTHROUGHS",
    "build_env",
    "cell_defined",
    "format_cell",
    "render_table",
    "reproduce_walkthrough",
    "resolve_dqn",
    "resolve_expert",
    "resolve_qlearn",
    "round_seed",
    "run_benchmark",
    "run_round",
    "summarize",
    "write_reports",
)
