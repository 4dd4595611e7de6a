"""Vanishing ideal service."""

from typing import List, Sequence, Tuple

from .base import BaseService
from ..helpers import vanishing
from ..helpers.rationals import to_point
from ..models.dyadic import DyadicCube
from ..models.groebner import GroebnerBasis
from ..models.measure import Measure
from ..models.polynomial import Monomial
from ..models.support import SupportDescriptor


class VanishingService(BaseService):
    """Service computing supports A_Q and vanishing ideals I_Q.

    Example:
        >>> api = AlpertApi()
        >>> G = api.vanishing.ideal_of(mu, DyadicCube(1, (0, 0)))
    """

    def support(self, mu: Measure, cube: DyadicCube) -> SupportDescriptor:
        return vanishing.support(mu, cube)

    def vanishing_ideal(self, desc: SupportDescriptor) -> GroebnerBasis:
        return vanishing.vanishing_ideal(desc, self._monomial_order(desc.nvars))

    def ideal_of(self, mu: Measure, cube: DyadicCube) -> GroebnerBasis:
        """I_Q for the measure on the cube."""
        return self.vanishing_ideal(self.support(mu, cube))

    def buchberger_moller(self, points: Sequence[Tuple], nvars: int) -> Tuple[GroebnerBasis, List[Monomial]]:
        """Reduced basis of the vanishing ideal of the points and its staircase."""
        return vanishing.buchberger_moller([to_point(p) for p in points], self._monomial_order(nvars))
