"""Common utility functions.

These functions may be used in general throughout the engine's Python code.
"""

from __future__ import annotations

import json
from datetime import date
from enum import Enum
from os import getenv
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel

from quantum_circuit_rl.common.logger import LOGGER

if TYPE_CHECKING or bool(getenv("MKDOCS_BUILD", "")):  # pragma: no cover
    from typing import Any


def clean_python_types(data: Any, **dump_kwargs: Any) -> Any:
    """Turn any types into JSON-friendly Python types.

    Use `model_dump()` method for Pydantic models.
    Use `value` property for Enums.
    Turn tuples, sets and NumPy arrays into lists and NumPy scalars into Python
    scalars.
    Complex numbers become `[real, imag]` pairs and datetimes ISO 8601 strings.
    """
    if isinstance(data, np.ndarray):
        return clean_python_types(data.tolist(), **dump_kwargs)

    if isinstance(data, (list, tuple, set)):
        return [clean_python_types(datum, **dump_kwargs) for datum in data]

    if isinstance(data, dict):
        return {
            clean_python_types(key): clean_python_types(value, **dump_kwargs)
            for key, value in data.items()
        }

    if isinstance(data, BaseModel):
        return clean_python_types(data.model_dump(**dump_kwargs))

    if isinstance(data, Enum):
        return clean_python_types(data.value, **dump_kwargs)

    if isinstance(data, np.generic):
        return clean_python_types(data.item(), **dump_kwargs)

    if isinstance(data, complex):
        return [data.real, data.imag]

    if isinstance(data, Path):
        return str(data)

    if isinstance(data, date):
        return data.isoformat()

    # Unknown or other basic type, e.g., str, int, etc.
    return data


def write_json(path: Path, data: Any) -> Path:
    """Write `data` as deterministic (sorted, indented) JSON.

    Parent directories are created as needed.

    Parameters:
        path: Target file.
        data: Anything `clean_python_types()` can handle.

    Returns:
        The path written to.

    """
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(clean_python_types(data), indent=2, sort_keys=True) + "\n",
        encoding="utf8",
    )
    LOGGER.info("Wrote %s", path)
    return path


def write_jsonl(path: Path, records: list[Any]) -> Path:
    """Write one JSON document per line."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf8") as handle:
        for record in records:
            handle.write(json.dumps(clean_python_types(record), sort_keys=True) + "\n")
    LOGGER.info("Wrote %s", path)
    return path
