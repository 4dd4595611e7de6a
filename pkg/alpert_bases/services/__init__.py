"""Service classes for alpert_bases.

Each service wraps one area of the library and shares the order, seed and
worker configuration held by BaseService.
"""

from .groebner import GroebnerService
from .vanishing import VanishingService
from .spaces import SpacesService
from .basis import BasisService

__all__ = ["GroebnerService", "VanishingService", "SpacesService", "BasisService"]
