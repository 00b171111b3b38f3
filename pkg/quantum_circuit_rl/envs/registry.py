"""Dense, insertion-ordered indices for state fingerprints."""

from __future__ import annotations

from os import getenv
from typing import TYPE_CHECKING

from quantum_circuit_rl.common.exceptions import RegistryOverflowError
from quantum_circuit_rl.common.logger import LOGGER

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from collections.abc import Iterable


class StateRegistry:
    """Map fingerprints to indices `0..count-1` in first-visit order.

    Parameters:
        cap: Maximum number of states. `None` lets the registry grow without bound.

    """

    def __init__(self, cap: int | None = None) -> None:
        self.cap = cap
        self._indices: dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self._indices)

    def __contains__(self, key: object) -> bool:
        return key in self._indices

    @property
    def count(self) -> int:
        return len(self._indices)

    def lookup(self, key: bytes) -> int | None:
        return self._indices.get(key)

    def register(self, key: bytes) -> tuple[int, bool]:
        """Return the index of `key`, registering it if new.

        Returns:
            The index and whether the key was newly registered.

        Raises:
            RegistryOverflowError: If a new key would exceed the cap.

        """
        index = self._indices.get(key)
        if index is not None:
            return index, False
        if self.cap is not None and len(self._indices) >= self.cap:
            LOGGER.error("State registry is full (cap=%d)", self.cap)
            raise RegistryOverflowError(
                f"Registering another state would exceed the cap of {self.cap} states"
            )
        index = len(self._indices)
        self._indices[key] = index
        return index, True

    def keys_hex(self) -> list[str]:
        """Registered keys, as hex strings, in index order."""
        return [key.hex() for key in self._indices]

    @classmethod
    def from_hex(cls, keys: Iterable[str], cap: int | None = None) -> StateRegistry:
        """Rebuild a registry from the output of `keys_hex()`."""
        registry = cls(cap=cap)
        for key in keys:
            registry.register(bytes.fromhex(key))
        return registry
