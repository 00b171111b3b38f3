"""A fully connected Q-network in plain NumPy, with a target copy."""

from __future__ import annotations

from os import getenv
from pathlib import Path
from typing import TYPE_CHECKING, Literal

import numpy as np

from quantum_circuit_rl.common.exceptions import StateIndexError
from quantum_circuit_rl.common.logger import LOGGER

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Sequence

    from quantum_circuit_rl.agents.replay import Transition

Encoding = Literal["one_hot", "matrix"]


def relu(x: np.ndarray) -> np.ndarray:
    return np.maximum(x, 0.0)


def relu_grad(x: np.ndarray) -> np.ndarray:
    return np.where(x > 0, 1.0, 0.0)


class PolicyNet:
    """`input -> hidden... (ReLU) -> n_actions (linear)`, plus a target network.

    Layers compute `y = x @ W + b` with `W` of shape `(fan_in, fan_out)`.
    Parameters are initialized uniformly in `[-1/sqrt(fan_in), 1/sqrt(fan_in)]`.

    Inputs are either integer state indices (`encoding="one_hot"`; the first
    layer gathers rows of `W` instead of multiplying by one-hot vectors) or dense
    float rows (`encoding="matrix"`).

    Parameters:
        input_dim: One-hot width or dense input size.
        n_actions: Number of outputs.
        hidden: Hidden layer widths.
        rng: Generator used for initialization.
        encoding: How states are fed to the network.

    """

    def __init__(
        self,
        input_dim: int,
        n_actions: int,
        hidden: Sequence[int] = (128, 128),
        rng: np.random.Generator | None = None,
        encoding: Encoding = "one_hot",
    ) -> None:
        rng = rng if rng is not None else np.random.default_rng()
        self.encoding: Encoding = encoding
        self.sizes = [input_dim, *hidden, n_actions]
        self.weights: list[np.ndarray] = []
        self.biases: list[np.ndarray] = []
        for fan_in, fan_out in zip(self.sizes[:-1], self.sizes[1:]):
            bound = 1 / np.sqrt(fan_in)
            self.weights.append(rng.uniform(-bound, bound, (fan_in, fan_out)))
            self.biases.append(rng.uniform(-bound, bound, fan_out))
        self.target_weights = [_.copy() for _ in self.weights]
        self.target_biases = [_.copy() for _ in self.biases]

    @property
    def input_dim(self) -> int:
        return self.sizes[0]

    @property
    def n_actions(self) -> int:
        return self.sizes[-1]

    def parameters(self, target: bool = False) -> list[np.ndarray]:
        """`[W0, b0, W1, b1, ...]` (views, not copies)."""
        weights, biases = (
            (self.target_weights, self.target_biases)
            if target
            else (self.weights, self.biases)
        )
        return [param for pair in zip(weights, biases) for param in pair]

    def _check_inputs(self, inputs: np.ndarray) -> np.ndarray:
        if self.encoding == "one_hot":
            inputs = np.asarray(inputs, dtype=np.int64).reshape(-1)
            if inputs.size and (inputs.max() >= self.input_dim or inputs.min() < 0):
                raise StateIndexError(
                    f"State index {int(inputs.max())} outside the network input "
                    f"dimension {self.input_dim}"
                )
            return inputs
        inputs = np.atleast_2d(np.asarray(inputs, dtype=float))
        if inputs.shape[1] != self.input_dim:
            raise StateIndexError(
                f"Expected inputs of width {self.input_dim}, got {inputs.shape[1]}"
            )
        return inputs

    def forward(
        self, inputs: np.ndarray, target: bool = False
    ) -> tuple[np.ndarray, list[np.ndarray]]:
        """Forward pass over a batch.

        Returns:
            The `(batch, n_actions)` outputs and the memory needed by
            [`backward()`][quantum_circuit_rl.agents.network.PolicyNet.backward]:
            the inputs followed by every pre-activation.

        """
        inputs = self._check_inputs(inputs)
        weights, biases = (
            (self.target_weights, self.target_biases)
            if target
            else (self.weights, self.biases)
        )
        if self.encoding == "one_hot":
            z = weights[0][inputs] + biases[0]
        else:
            z = inputs @ weights[0] + biases[0]
        memory = [inputs, z]
        for W, b in zip(weights[1:], biases[1:]):
            z = relu(z) @ W + b
            memory.append(z)
        return z, memory

    def predict(self, inputs: np.ndarray, target: bool = False) -> np.ndarray:
        return self.forward(inputs, target)[0]

    def backward(
        self, memory: list[np.ndarray], d_out: np.ndarray
    ) -> tuple[list[np.ndarray], np.ndarray | None]:
        """Back-propagate `d_out` (gradient w.r.t. the outputs) through the network.

        Returns:
            Parameter gradients ordered as
            [`parameters()`][quantum_circuit_rl.agents.network.PolicyNet.parameters]
            and the gradient w.r.t. dense inputs (`None` for one-hot inputs).

        """
        inputs, pre_activations = memory[0], memory[1:]
        grads: list[np.ndarray] = []
        dz = d_out
        for layer in range(len(self.weights) - 1, 0, -1):
            a = relu(pre_activations[layer - 1])
            grads[:0] = [a.T @ dz, dz.sum(axis=0)]
            dz = (dz @ self.weights[layer].T) * relu_grad(pre_activations[layer - 1])

        if self.encoding == "one_hot":
            dW0 = np.zeros_like(self.weights[0])
            np.add.at(dW0, inputs, dz)
            d_inputs = None
        else:
            dW0 = inputs.T @ dz
            d_inputs = dz @ self.weights[0].T
        grads[:0] = [dW0, dz.sum(axis=0)]
        return grads, d_inputs

    def input_jacobian(self, x: np.ndarray) -> np.ndarray:
        """`d output / d input` at a dense input, of shape `(n_actions, input_dim)`."""
        if self.encoding != "matrix":
            raise StateIndexError("The input Jacobian needs dense (matrix) inputs")
        batch = np.repeat(np.atleast_2d(np.asarray(x, dtype=float)), self.n_actions, 0)
        _, memory = self.forward(batch)
        _, d_inputs = self.backward(memory, np.eye(self.n_actions))
        return d_inputs  # type: ignore[return-value]

    def apply_gradients(
        self, grads: list[np.ndarray], lr: float, max_grad_norm: float | None = None
    ) -> float:
        """One SGD step, optionally rescaling the gradient to `max_grad_norm`.

        Returns:
            The gradient norm before clipping.

        """
        norm = float(np.sqrt(sum(np.sum(g * g) for g in grads)))
        scale = lr
        if max_grad_norm is not None and norm > max_grad_norm:
            scale = lr * max_grad_norm / norm
        for param, grad in zip(self.parameters(), grads):
            param -= scale * grad
        return norm

    def update_target(
        self, mode: Literal["soft", "hard"] = "hard", tau: float = 1.0
    ) -> None:
        """Hard: copy the policy. Soft: `target <- (1 - tau) target + tau policy`."""
        for target, policy in zip(self.parameters(target=True), self.parameters()):
            if mode == "hard":
                target[...] = policy
            else:
                target *= 1 - tau
                target += tau * policy

    def save(self, path: Path | str) -> Path:
        """Write layer sizes, encoding and all parameters to an `.npz` file."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        arrays = {"sizes": np.asarray(self.sizes, dtype=np.int64)}
        for i, param in enumerate(self.parameters()):
            arrays[f"policy_{i}"] = param
        for i, param in enumerate(self.parameters(target=True)):
            arrays[f"target_{i}"] = param
        with path.open("wb") as handle:
            np.savez(handle, encoding=np.asarray(self.encoding), **arrays)
        LOGGER.info("Wrote network checkpoint %s", path)
        return path

    @classmethod
    def load(cls, path: Path | str) -> PolicyNet:
        with np.load(Path(path)) as data:
            sizes = [int(_) for _ in data["sizes"]]
            encoding: Encoding = str(data["encoding"])  # type: ignore[assignment]
            net = cls(sizes[0], sizes[-1], sizes[1:-1], encoding=encoding)
            for i, param in enumerate(net.parameters()):
                param[...] = data[f"policy_{i}"]
            for i, param in enumerate(net.parameters(target=True)):
                param[...] = data[f"target_{i}"]
        return net


def net_forward(net: PolicyNet, state: int | np.ndarray) -> np.ndarray:
    """Q-values of a single state (index or dense encoding)."""
    if net.encoding == "one_hot":
        return net.predict(np.asarray([state]))[0]
    return net.predict(np.atleast_2d(state))[0]


def loss_and_gradients(
    net: PolicyNet,
    batch: Transition,
    gamma: float,
) -> tuple[float, list[np.ndarray]]:
    """Mean squared TD error of `batch` and its gradient w.r.t. the policy parameters.

    Targets are `r + gamma max_a' Q(s', a' | target)`, or `r` for terminal
    transitions; the target network is not differentiated.
    """
    q_next = net.predict(batch.next_state, target=True).max(axis=1)
    targets = batch.reward + gamma * q_next * (1.0 - batch.done)
    outputs, memory = net.forward(batch.state)
    rows = np.arange(len(targets))
    diff = outputs[rows, batch.action] - targets
    loss = float(np.mean(diff**2))
    d_out = np.zeros_like(outputs)
    d_out[rows, batch.action] = 2.0 * diff / len(targets)
    grads, _ = net.backward(memory, d_out)
    return loss, grads


def net_train_step(
    net: PolicyNet,
    batch: Transition,
    gamma: float,
    lr: float,
    max_grad_norm: float | None = None,
) -> float:
    """One gradient-descent step on the policy parameters.

    Returns:
        The loss before the step.

    """
    loss, grads = loss_and_gradients(net, batch, gamma)
    net.apply_gradients(grads, lr, max_grad_norm)
    return loss


def update_target(
    net: PolicyNet, mode: Literal["soft", "hard"], tau: float = 1.0
) -> None:
    """Soft (`tau`) or hard update of the target network of `net`."""
    net.update_target(mode, tau)
