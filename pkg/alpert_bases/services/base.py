"""Base service class for alpert_bases services.

This module provides the shared configuration of all services: the active
monomial order, the random seed of the verification routines and the
number of worker processes used by basis construction.
"""

import numpy as np

from ..errors import InvalidArgumentException
from ..models.polynomial import MonomialOrder, OrderKind


class BaseService:
    """Base class for all alpert_bases services.

    Attributes:
        _order: Name of the monomial order (grevlex, grlex or lex).
        _seed: Seed of the random draws made by verification.
        _workers: Worker processes for per-cube constructions.
    """

    def __init__(self, order: str = OrderKind.GREVLEX, seed: int = 0, workers: int = 1):
        """Initialize the base service.

        Args:
            order: Name of the monomial order.
            seed: Seed of the random draws made by verification.
            workers: Worker processes for per-cube constructions.
        """
        if order not in (OrderKind.GRLEX, OrderKind.GREVLEX, OrderKind.LEX):
            raise InvalidArgumentException(f'Unknown monomial order: {order}')
        if workers < 1:
            raise InvalidArgumentException(f'workers must be positive, got {workers}')
        self._order = order
        self._seed = seed
        self._workers = workers

    def _monomial_order(self, nvars: int) -> MonomialOrder:
        return MonomialOrder(self._order, nvars)

    def _rng(self) -> np.random.Generator:
        """A fresh generator, so repeated calls draw the same numbers."""
        return np.random.default_rng(self._seed)
