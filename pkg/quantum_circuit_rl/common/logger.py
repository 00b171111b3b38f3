"""Logging to both file and console"""

from __future__ import annotations

import logging
import logging.handlers
import sys
from contextlib import contextmanager
from pathlib import Path

from quantum_circuit_rl.common.config import CONFIG


@contextmanager
def disable_logging():
    """Temporarily disable logging.

    Usage:

    ```python
    from quantum_circuit_rl.common.logger import disable_logging

    # Do stuff, logging to all handlers.
    # ...
    with disable_logging():
        # Do stuff, without logging to any handlers.
        # ...
    # Do stuff, logging to all handlers now re-enabled.
    # ...
    ```

    """
    try:
        # Disable logging lower than CRITICAL level
        logging.disable(logging.CRITICAL)
        yield
    finally:
        # Re-enable logging to desired levels
        logging.disable(logging.NOTSET)


# Instantiate LOGGER
LOGGER = logging.getLogger("quantum-circuit-rl")
LOGGER.setLevel(logging.DEBUG)

# Save a file with all messages (DEBUG level)
ROOT_DIR = Path(__file__).parent.parent.parent.resolve()
LOGS_DIR = ROOT_DIR.joinpath("logs/")

try:
    LOGS_DIR.mkdir(exist_ok=True)
    FILE_HANDLER: logging.Handler | None = logging.handlers.RotatingFileHandler(
        LOGS_DIR.joinpath("quantum_circuit_rl.log"), maxBytes=1000000, backupCount=5
    )
except OSError:
    FILE_HANDLER = None

CONSOLE_HANDLER = logging.StreamHandler(sys.stdout)
CONSOLE_HANDLER.setLevel(CONFIG.log_level.upper())

# Set formatters
FILE_FORMATTER = logging.Formatter(
    "[%(levelname)-8s %(asctime)s %(filename)s:%(lineno)d] %(message)s",
    "%d-%m-%Y %H:%M:%S",
)
CONSOLE_FORMATTER = logging.Formatter("%(levelname)-8s [%(name)s] %(message)s")
CONSOLE_HANDLER.setFormatter(CONSOLE_FORMATTER)

# Finalize LOGGER
if FILE_HANDLER is not None:
    FILE_HANDLER.setLevel(logging.DEBUG)
    FILE_HANDLER.setFormatter(FILE_FORMATTER)
    LOGGER.addHandler(FILE_HANDLER)
LOGGER.addHandler(CONSOLE_HANDLER)
