"""Package logging for alpert_bases.

Modules log through children of the ``alpert_bases`` logger, which stays
silent (WARNING, no output handler) until debug mode is switched on:

    from alpert_bases import set_debug_mode
    set_debug_mode(True)                     # progress on stdout
    set_debug_mode(True, stream=sys.stderr)  # what ``alpert-bases --debug`` uses

or by exporting ALPERT_BASES_DEBUG=1 before the package is imported.

Inside the package:

    from ..logging_config import get_logger
    logger = get_logger("groebner")
"""

import logging
import os
import sys
from typing import Optional, TextIO

LOGGER_NAME = "alpert_bases"
DEBUG_ENV = "ALPERT_BASES_DEBUG"
DEBUG_FORMAT = "[%(asctime)s] %(name)s %(levelname)s: %(message)s"

_HANDLER_NAME = "alpert_bases.debug"


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in ("1", "true", "yes")


_debug_mode = _env_flag(DEBUG_ENV)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Package logger, or its child ``alpert_bases.<name>``."""
    if not name:
        return logging.getLogger(LOGGER_NAME)
    if name != LOGGER_NAME and not name.startswith(LOGGER_NAME + "."):
        name = f"{LOGGER_NAME}.{name}"
    return logging.getLogger(name)


def _debug_handler(logger: logging.Logger) -> Optional[logging.Handler]:
    return next((h for h in logger.handlers if h.get_name() == _HANDLER_NAME), None)


def set_debug_mode(enabled: bool = True, stream: Optional[TextIO] = None) -> None:
    """Switch DEBUG logging of algorithm progress on or off.

    Progress covers S-pair counts, staircase growth, per-cube dimensions
    and verification residuals. Enabling twice keeps a single handler and
    moves it to the new stream; disabling removes it.

    Args:
        enabled: Turn debug output on (default) or off.
        stream: Where records go while enabled. Defaults to stdout.
    """
    global _debug_mode
    _debug_mode = enabled

    logger = get_logger()
    handler = _debug_handler(logger)

    if not enabled:
        logger.setLevel(logging.WARNING)
        if handler is not None:
            logger.removeHandler(handler)
        return

    logger.setLevel(logging.DEBUG)
    stream = stream or sys.stdout
    if handler is None:
        handler = logging.StreamHandler(stream)
        handler.set_name(_HANDLER_NAME)
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter(DEBUG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S"))
        logger.addHandler(handler)
    else:
        handler.setStream(stream)


def is_debug_mode() -> bool:
    return _debug_mode


_root_logger = get_logger()
# no fallback output while debug is off
_root_logger.addHandler(logging.NullHandler())
set_debug_mode(_debug_mode)
