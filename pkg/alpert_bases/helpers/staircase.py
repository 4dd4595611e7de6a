"""Staircase classification of monomials against a reduced Groebner basis."""

import itertools
from typing import List, Tuple

from ..errors import InvalidArgumentException, NonGradedOrderException
from ..logging_config import get_logger
from ..models.groebner import GroebnerBasis
from ..models.polynomial import Monomial, f_n_k, monomial_divides, monomial_support

logger = get_logger("staircase")


def _require_graded(G: GroebnerBasis) -> None:
    if not G.order.is_graded:
        logger.error(f"Staircase classification requested under the {G.order.kind} order")
        raise NonGradedOrderException(
            f'gdep/gind need a graded monomial order, got {G.order.kind}'
        )


def gdep_gind(G: GroebnerBasis, n: int, k: int) -> Tuple[List[Monomial], List[Monomial]]:
    """Split F^n_k into monomials divisible by some LT(G) and the rest.

    Both lists keep the ascending order of F^n_k.
    """
    _require_graded(G)
    if n != G.nvars:
        raise InvalidArgumentException(f'Basis lives in {G.nvars} variables, asked for n={n}')
    leads = G.leading_monomials
    gdep, gind = [], []
    for monomial in f_n_k(n, k, G.order):
        if any(monomial_divides(lead, monomial) for lead in leads):
            gdep.append(monomial)
        else:
            gind.append(monomial)
    return gdep, gind


def staircase_count(G: GroebnerBasis, k: int) -> int:
    """Number of monomials of degree < k outside the leading-term ideal."""
    return len(gdep_gind(G, G.nvars, k)[1])


def hilbert_dimension(G: GroebnerBasis) -> int:
    """Largest set of variables none of whose monomials is a leading monomial.

    The zero ideal gives nvars. The unit ideal gives -1, since its leading
    monomial 1 uses no variables at all and every set would fail.
    """
    n = G.nvars
    if G.is_unit_ideal:
        return -1
    supports = {monomial_support(m) for m in G.leading_monomials}
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            mask = sum(1 << i for i in subset)
            # a leading monomial "uses only S" when its support is inside S
            if not any(support & ~mask == 0 for support in supports):
                return size
    return -1


def standard_monomials(G: GroebnerBasis) -> List[Monomial]:
    """The finite staircase of a zero-dimensional ideal, ascending.

    Raises InvalidArgumentException when infinitely many monomials are standard.
    """
    _require_graded(G)
    if hilbert_dimension(G) > 0:
        raise InvalidArgumentException('The ideal is not zero-dimensional; its staircase is infinite')
    if G.is_unit_ideal:
        return []
    # a pure power x_i^a lies in LT(G) for every i, so degrees are bounded
    bound = sum(
        min(m[i] for m in G.leading_monomials if monomial_support(m) == 1 << i)
        for i in range(G.nvars)
    )
    _, gind = gdep_gind(G, G.nvars, bound + 1)
    return gind
