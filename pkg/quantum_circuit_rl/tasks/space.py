"""Size of the search tree spanned by an action set."""

from __future__ import annotations

from quantum_circuit_rl.common.exceptions import ConfigurationError
from quantum_circuit_rl.models import SpaceSizeReport

MAX_BOUND = 2**63 - 1
"""Largest bound that still fits a signed 64-bit state index."""


def space_size(branching: int, depth: int) -> SpaceSizeReport:
    """Number of nodes of a complete `branching`-ary tree with `depth + 1` levels.

    Equals `(c^(b+1) - 1) / (c - 1)`, computed in exact integer arithmetic.

    Parameters:
        branching: Number of actions `c`, at least 2.
        depth: Circuit length `b`, at least 0.

    Returns:
        The report holding `c`, `b` and the bound.

    Raises:
        ConfigurationError: For invalid arguments or a bound beyond 64-bit indices.

    """
    if branching < 2 or depth < 0:
        raise ConfigurationError(
            "space_size needs branching >= 2 and depth >= 0, got "
            f"({branching}, {depth})"
        )
    bound = (branching ** (depth + 1) - 1) // (branching - 1)
    if bound > MAX_BOUND:
        raise ConfigurationError(
            f"State space of {branching} actions at depth {depth} overflows 64-bit "
            "indices"
        )
    return SpaceSizeReport(branching=branching, depth=depth, bound=bound)
