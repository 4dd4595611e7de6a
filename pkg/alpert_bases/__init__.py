"""Alpert wavelet bases for L^2(mu) in Python

Exact dimensions of component and Alpert spaces, Groebner bases of
vanishing ideals, and the variable Alpert basis of a dyadic grid window:
- atomic and uniform-box measures with exact rational inner products
- Buchberger and Buchberger-Moeller over the rationals
- construction and verification of wavelet, complement and top bases

Example:
    >>> from alpert_bases import AlpertApi, models
    >>> api = AlpertApi(seed=7)
    >>> G = api.groebner.buchberger(["x2 - x1"], nvars=2)
    >>> api.groebner.staircase_count(G, 3)
    3
"""

# Main API class
from .api import AlpertApi

# Models
from . import models

# Logging configuration
from .logging_config import set_debug_mode, is_debug_mode

# Service classes
from .services import (
    GroebnerService,
    VanishingService,
    SpacesService,
    BasisService,
)

__all__ = [
    # Main class
    "AlpertApi",
    # Models
    "models",
    # Services
    "GroebnerService",
    "VanishingService",
    "SpacesService",
    "BasisService",
    # Logging
    "set_debug_mode",
    "is_debug_mode",
]
