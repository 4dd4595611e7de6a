"""Supports A_Q of measures on cubes and their vanishing ideals I_Q."""

import heapq
from fractions import Fraction
from typing import List, Sequence, Tuple

from .linalg import solve_columns
from ..logging_config import get_logger
from ..models.dyadic import DyadicCube
from ..models.groebner import GroebnerBasis
from ..models.measure import Measure
from ..models.polynomial import Monomial, MonomialOrder, Polynomial, monomial_divides
from ..models.support import SupportDescriptor, SupportKind

logger = get_logger("vanishing")


def support(mu: Measure, cube: DyadicCube) -> SupportDescriptor:
    """A_Q for the measure restricted to the cube."""
    if mu.is_atomic:
        return SupportDescriptor(mu.nvars, SupportKind.FINITE_POINTS,
                                 points=[atom.point for atom in mu.atoms_in(cube)])
    regions = [region for region, _ in mu.regions(cube)]
    if regions:
        return SupportDescriptor(mu.nvars, SupportKind.FULL_BOX, boxes=regions)
    return SupportDescriptor(mu.nvars, SupportKind.FINITE_POINTS, points=[])


def vanishing_ideal(desc: SupportDescriptor, order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of I_Q.

    full_box supports give the zero ideal; finite point sets go through
    Buchberger-Moeller; no points at all give the unit ideal.
    """
    if desc.kind == SupportKind.FULL_BOX:
        return GroebnerBasis(desc.nvars, order, [], reduced=True)
    basis, _ = buchberger_moller(desc.points, order)
    return basis


def _evaluations(monomial: Monomial, points: Sequence[Tuple[Fraction, ...]]) -> List[Fraction]:
    values = []
    for point in points:
        value = Fraction(1)
        for x, a in zip(point, monomial):
            if a:
                value *= x ** a
        values.append(value)
    return values


def buchberger_moller(points: Sequence[Tuple[Fraction, ...]],
                      order: MonomialOrder) -> Tuple[GroebnerBasis, List[Monomial]]:
    """Vanishing ideal of finitely many points.

    Monomials are visited in increasing order. A monomial whose evaluation
    vector depends on the current staircase yields the basis element
    t - sum c_s s; otherwise it joins the staircase and its multiples by
    each variable become candidates. With a graded order the result is the
    reduced Groebner basis, sorted by leading monomial.
    """
    n = order.nvars
    if not points:
        return GroebnerBasis(n, order, [Polynomial.constant(n)], reduced=True), []

    staircase: List[Monomial] = []
    vectors: List[List[Fraction]] = []
    generators: List[Polynomial] = []
    leads: List[Monomial] = []

    one = (0,) * n
    candidates = [(order.key(one), one)]
    seen = {one}
    while candidates:
        _, monomial = heapq.heappop(candidates)
        if any(monomial_divides(lead, monomial) for lead in leads):
            continue
        values = _evaluations(monomial, points)
        coeffs = solve_columns(vectors, values)
        if coeffs is None:
            staircase.append(monomial)
            vectors.append(values)
            for i in range(n):
                successor = tuple(a + (1 if j == i else 0) for j, a in enumerate(monomial))
                if successor not in seen:
                    seen.add(successor)
                    heapq.heappush(candidates, (order.key(successor), successor))
        else:
            terms = {monomial: Fraction(1)}
            for s, c in zip(staircase, coeffs):
                if c:
                    terms[s] = -c
            generators.append(Polynomial(n, terms))
            leads.append(monomial)

    logger.debug(f"Buchberger-Moeller: {len(points)} points, staircase {len(staircase)}, "
                 f"{len(generators)} generators")
    generators.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return GroebnerBasis(n, order, generators, reduced=True), order.sorted(staircase)
