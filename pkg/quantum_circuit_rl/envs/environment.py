"""Matrix, reverse-matrix and tensor-network environments."""

from __future__ import annotations

from functools import reduce
from os import getenv
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from quantum_circuit_rl.common.config import CONFIG
from quantum_circuit_rl.common.exceptions import (
    ConfigurationError,
    EpisodeDoneError,
    InvalidActionError,
    StateIndexError,
)
from quantum_circuit_rl.common.logger import LOGGER
from quantum_circuit_rl.envs.registry import StateRegistry
from quantum_circuit_rl.gatealg import (
    basis_state,
    embed,
    fingerprint,
    state_overlap,
    trace_fidelity,
)
from quantum_circuit_rl.models import (
    ActionSpec,
    Representation,
    RewardMode,
    RewardRule,
)
from quantum_circuit_rl.tasks import action_set, get_task

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from quantum_circuit_rl.gatealg import StateVector, UnitaryMatrix
    from quantum_circuit_rl.models import TaskSpec


class StepResult(NamedTuple):
    """Outcome of a single environment step."""

    next_index: int
    reward: float
    done: bool


class EnvState(NamedTuple):
    """The current value, its registry index and the episode depth."""

    value: np.ndarray
    index: int
    depth: int


class _Value(NamedTuple):
    # `unitary` is None when only a state vector is tracked; `state` is None
    # outside the tensor-network representation.
    unitary: UnitaryMatrix | None
    state: StateVector | None


class CircuitEnv:
    """A circuit synthesis MDP with a `reset()`/`step()` contract.

    - matrix: starts from the identity, targets the task unitary.
    - reverse: starts from the task unitary, applies inverse gates, targets the
      identity.
    - tn: starts from `|0...0>`. Bell and GHZ tasks compare state vectors; gate
      tasks also track the accumulated unitary and compare that.

    States are indexed by fingerprint in first-visit order over the lifetime of the
    environment, so equal values (up to a global phase) share an index.

    Parameters:
        task: The task to synthesize.
        representation: The MDP representation.
        max_steps: Episode step limit; a composite action counts as one step.
        walkthrough: Use the small demonstration action sets (Bell state only).
        reward: Reward rule; defaults follow `CONFIG`.
        state_cap: Registry cap; `None` grows without bound.
        fingerprint_tol: Rounding grid for state fingerprints.

    """

    def __init__(
        self,
        task: TaskSpec,
        representation: Representation,
        max_steps: int | None = None,
        *,
        walkthrough: bool = False,
        reward: RewardRule | None = None,
        state_cap: int | None = None,
        fingerprint_tol: float | None = None,
    ) -> None:
        self.task = task
        self.representation = representation
        self.max_steps = CONFIG.max_steps if max_steps is None else max_steps
        if self.max_steps < 1:
            raise ConfigurationError(f"max_steps must be >= 1, got {self.max_steps}")
        self.walkthrough = walkthrough
        self.actions = action_set(task, representation, walkthrough=walkthrough)
        self.fingerprint_tol = (
            CONFIG.fingerprint_tol if fingerprint_tol is None else fingerprint_tol
        )

        dim = 2**task.n_qubits
        identity = np.eye(dim, dtype=np.complex128)
        if representation is Representation.TN:
            mode = task.tn_reward_mode
            self._initial = _Value(
                identity if mode is RewardMode.UNITARY_TRACE else None,
                basis_state(task.n_qubits),
            )
            self.target_unitary: UnitaryMatrix = task.target_unitary
            self.target_state: StateVector | None = task.target_state
        elif representation is Representation.REVERSE:
            mode = RewardMode.UNITARY_TRACE
            self._initial = _Value(task.target_unitary.copy(), None)
            self.target_unitary = identity
            self.target_state = None
        else:
            mode = RewardMode.UNITARY_TRACE
            self._initial = _Value(identity, None)
            self.target_unitary = task.target_unitary
            self.target_state = None

        self.reward_rule = reward or RewardRule(
            mode=mode,
            threshold=CONFIG.reward_threshold,
            success_reward=CONFIG.success_reward,
        )

        self._action_matrices = [
            reduce(
                lambda accumulated, placement: embed(placement, task.n_qubits)
                @ accumulated,
                action.applied(),
                identity,
            )
            for action in self.actions
        ]
        self._action_lookup = {action: i for i, action in enumerate(self.actions)}

        self.registry = StateRegistry(
            cap=CONFIG.state_cap if state_cap is None else state_cap
        )
        self._values: list[_Value | None] = []
        self._register(self._initial)

        self._current = self._initial
        self._index = 0
        self._depth = 0
        self._done = False

        LOGGER.debug(
            "Created %s environment for %r with %d actions (max_steps=%d)",
            representation.value,
            task.name,
            self.n_actions,
            self.max_steps,
        )

    @property
    def n_actions(self) -> int:
        return len(self.actions)

    @property
    def action_labels(self) -> list[str]:
        return [action.label for action in self.actions]

    @property
    def done(self) -> bool:
        return self._done

    @property
    def state(self) -> EnvState:
        return EnvState(self._primary(self._current), self._index, self._depth)

    def _primary(self, value: _Value, keyed: bool = False) -> np.ndarray:
        # keyed: prefer the value the registry fingerprints, i.e. the unitary.
        first, second = (
            (value.unitary, value.state) if keyed else (value.state, value.unitary)
        )
        return first if first is not None else second  # type: ignore[return-value]

    def _key(self, value: _Value) -> bytes:
        # Gate tasks in the tensor-network representation are keyed by the unitary.
        return fingerprint(self._primary(value, keyed=True), self.fingerprint_tol)

    def _register(self, value: _Value) -> int:
        index, new = self.registry.register(self._key(value))
        if new:
            self._values.append(value)
        elif self._values[index] is None:
            self._values[index] = value
        return index

    def restore_registry(self, registry: StateRegistry) -> None:
        """Adopt a registry saved by an earlier run so state indices match it.

        Values of restored states become available once an episode reaches them.

        Raises:
            ConfigurationError: If index 0 of `registry` is not this environment's
                initial state.

        """
        if registry.lookup(self._key(self._initial)) != 0:
            raise ConfigurationError(
                "The registry does not start from the initial state of this "
                f"{self.representation.value} environment for {self.task.name!r}"
            )
        self.registry = registry
        self._values = [self._initial, *([None] * (len(registry) - 1))]
        self.reset()

    def _advance(self, value: _Value, action_index: int) -> _Value:
        matrix = self._action_matrices[action_index]
        return _Value(
            None if value.unitary is None else matrix @ value.unitary,
            None if value.state is None else matrix @ value.state,
        )

    def _fidelity(self, value: _Value) -> float:
        if self.reward_rule.mode is RewardMode.STATE_OVERLAP:
            if value.state is None or self.target_state is None:
                raise InvalidActionError(
                    "State-overlap rewards need a state vector to compare"
                )
            return state_overlap(value.state, self.target_state)
        assert value.unitary is not None
        return trace_fidelity(value.unitary, self.target_unitary)

    def fidelity(self) -> float:
        """Fidelity of the current value with the target."""
        return self._fidelity(self._current)

    def value_of(self, index: int) -> np.ndarray:
        """The value registered under `index` (the unitary for unitary-keyed states).

        Raises:
            StateIndexError: If no value is known for `index`.

        """
        value = self._values[index] if 0 <= index < len(self._values) else None
        if value is None:
            raise StateIndexError(f"No value is known for state index {index}")
        return self._primary(value, keyed=True)

    def action_index(self, action: int | ActionSpec) -> int:
        """Resolve an action (or its index) to its index in the action set.

        Raises:
            InvalidActionError: If the action is not in the action set.

        """
        if isinstance(action, ActionSpec):
            if action not in self._action_lookup:
                raise InvalidActionError(
                    f"{action.label} is not in the {self.representation.value} action "
                    f"set of {self.task.name!r}"
                )
            return self._action_lookup[action]
        if isinstance(action, (int, np.integer)) and 0 <= action < self.n_actions:
            return int(action)
        raise InvalidActionError(
            f"Action index {action!r} outside 0..{self.n_actions - 1}"
        )

    def expand(self, depth: int) -> None:
        """Register every state reachable within `depth` actions of the initial one.

        The expansion is breadth-first and expands each distinct state once per
        level. The current episode is unaffected.
        """
        frontier = {self._key(self._initial): self._initial}
        for level in range(depth):
            children: dict[bytes, _Value] = {}
            for value in frontier.values():
                for action_index in range(self.n_actions):
                    child = self._advance(value, action_index)
                    self._register(child)
                    children.setdefault(self._key(child), child)
            frontier = children
            LOGGER.debug(
                "Expanded level %d: %d distinct states", level + 1, len(frontier)
            )

    def reset(self) -> int:
        """Return to the initial value; returns its index, which is always 0."""
        self._current = self._initial
        self._index = 0
        self._depth = 0
        self._done = False
        return self._index

    def step(self, action: int | ActionSpec) -> StepResult:
        """Apply `action` after the current value.

        The reward is the success reward iff the fidelity of the new value with the
        target exceeds the threshold. The episode ends on success or when the step
        limit is reached.

        Raises:
            EpisodeDoneError: If the episode has already ended.
            InvalidActionError: If the action is not in the action set.

        """
        if self._done:
            raise EpisodeDoneError("The episode is done; call reset() first")
        action_index = self.action_index(action)

        self._current = self._advance(self._current, action_index)
        self._index = self._register(self._current)
        self._depth += 1

        success = self._fidelity(self._current) > self.reward_rule.threshold
        reward = self.reward_rule.success_reward if success else 0.0
        self._done = success or self._depth >= self.max_steps
        return StepResult(self._index, reward, self._done)


def make_env(
    task: TaskSpec | str,
    representation: Representation | str,
    max_steps: int | None = None,
    **kwargs: object,
) -> CircuitEnv:
    """Build a [`CircuitEnv`][quantum_circuit_rl.envs.environment.CircuitEnv].

    Raises:
        ConfigurationError: For an unknown task or an undefined task/representation
            combination.

    """
    if isinstance(task, str):
        task = get_task(task)
    if not isinstance(representation, Representation):
        try:
            representation = Representation(representation)
        except ValueError as exc:
            raise ConfigurationError(
                f"Unknown representation {representation!r}"
            ) from exc
    return CircuitEnv(
        task, representation, max_steps, **kwargs  # type: ignore[arg-type]
    )
