"""Groebner basis service.

Buchberger's algorithm, normal forms and the staircase of leading terms.
"""

from typing import List, Optional, Sequence, Tuple, Union

from .base import BaseService
from ..helpers import groebner as groebner_helpers
from ..helpers import staircase
from ..models.groebner import GroebnerBasis
from ..models.polynomial import Monomial, Polynomial

PolynomialLike = Union[str, Polynomial]


class GroebnerService(BaseService):
    """Service computing reduced Groebner bases and their staircases.

    Example:
        >>> from alpert_bases import AlpertApi
        >>> api = AlpertApi()
        >>> G = api.groebner.buchberger(["x1^2 - x2", "x1*x2 - 1"], nvars=2)
        >>> api.groebner.hilbert_dimension(G)
        0
    """

    def _polynomials(self, polys: Sequence[PolynomialLike], nvars: int) -> List[Polynomial]:
        return [Polynomial.parse(p, nvars) if isinstance(p, str) else p for p in polys]

    def buchberger(self, gens: Sequence[PolynomialLike], nvars: int,
                   max_pairs: Optional[int] = None) -> GroebnerBasis:
        """Reduced Groebner basis of the ideal generated by gens.

        Args:
            gens: Generators, as Polynomial objects or texts in x1..xn.
            nvars: Number of variables.
            max_pairs: Optional budget of S-pairs.

        Returns:
            GroebnerBasis sorted by ascending leading monomial.

        Raises:
            InvalidArgumentException: If a generator text cannot be parsed.
            StepLimitExceededException: If the budget is exhausted.
        """
        order = self._monomial_order(nvars)
        return groebner_helpers.buchberger(self._polynomials(gens, nvars), order, max_pairs)

    def reduce(self, p: PolynomialLike, G: GroebnerBasis) -> Polynomial:
        """Normal form of p modulo G."""
        return G.normal_form(self._polynomials([p], G.nvars)[0])

    def gdep_gind(self, G: GroebnerBasis, k: int) -> Tuple[List[Monomial], List[Monomial]]:
        return staircase.gdep_gind(G, G.nvars, k)

    def staircase_count(self, G: GroebnerBasis, k: int) -> int:
        return staircase.staircase_count(G, k)

    def hilbert_dimension(self, G: GroebnerBasis) -> int:
        return staircase.hilbert_dimension(G)

    def standard_monomials(self, G: GroebnerBasis) -> List[Monomial]:
        return staircase.standard_monomials(G)
