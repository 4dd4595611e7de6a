"""Alpert bases for L^2(mu) in Python.

This module provides a high-level interface to the exact dimension
computations, the Groebner machinery and the variable Alpert basis.

Example:
    >>> from alpert_bases import AlpertApi, models, set_debug_mode
    >>>
    >>> # Enable debug logging (optional)
    >>> set_debug_mode(True)
    >>>
    >>> api = AlpertApi(order=models.OrderKind.GREVLEX, seed=7)
    >>> mu = models.Measure.atomic([("0", "0"), ("1/4", "1/4"), ("1/2", "1/2"), ("3/4", "3/4")])
    >>> cube = models.DyadicCube(0, (0, 0))
    >>> api.spaces.component_dimension(mu, cube, api.spaces.degree_family(2, 3))
    3
"""

from .services import BasisService, GroebnerService, SpacesService, VanishingService
from . import models


class AlpertApi:
    """Main API class providing access to all alpert_bases functionality.

    Attributes:
        groebner: Groebner bases, normal forms and staircases
        vanishing: supports and vanishing ideals of measures
        spaces: component and Alpert spaces, exact dimensions
        basis: the variable Alpert basis of a grid window
    """

    def __init__(self, order: str = models.OrderKind.GREVLEX, seed: int = 0, workers: int = 1):
        """Initialize the API.

        Args:
            order: Monomial order for families and Groebner bases (default: grevlex)
            seed: Seed of the random draws made by verification (default: 0)
            workers: Worker processes for basis construction (default: 1)
        """
        self._order = order
        self._seed = seed
        self._workers = workers

        self.groebner = GroebnerService(order=order, seed=seed, workers=workers)
        self.vanishing = VanishingService(order=order, seed=seed, workers=workers)
        self.spaces = SpacesService(order=order, seed=seed, workers=workers)
        self.basis = BasisService(order=order, seed=seed, workers=workers)

    @property
    def order(self) -> str:
        return self._order

    @property
    def seed(self) -> int:
        return self._seed
