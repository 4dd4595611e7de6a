"""Shim module to expose the package when this checkout is vendored as a subpackage."""

from .alpert_bases import AlpertApi
from .alpert_bases import models
from .alpert_bases.logging_config import set_debug_mode, is_debug_mode

__all__ = ["AlpertApi", "models", "set_debug_mode", "is_debug_mode"]
