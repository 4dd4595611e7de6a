"""Multivariate division and Buchberger's algorithm over the rationals."""

from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..errors import DimensionMismatchException, StepLimitExceededException
from ..logging_config import get_logger
from ..models.groebner import GroebnerBasis
from ..models.polynomial import (
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

logger = get_logger("groebner")

Pair = Tuple[int, int]


def reduce(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Return the remainder of p on division by basis.

    No monomial of the remainder is divisible by a leading monomial of the
    basis, and p minus the remainder lies in the ideal of the basis.
    """
    divisors = []
    for g in basis:
        if g.nvars != p.nvars:
            raise DimensionMismatchException(
                f'Cannot divide a polynomial in {p.nvars} variables by one in {g.nvars}'
            )
        if not g.is_zero():
            monomial, coeff = g.leading_term(order)
            divisors.append((monomial, coeff, g))

    work: Dict[Monomial, object] = p.terms
    remainder: Dict[Monomial, object] = {}
    while work:
        monomial = max(work, key=order.key)
        coeff = work[monomial]
        for lead, lead_coeff, g in divisors:
            quotient = monomial_div(monomial, lead)
            if quotient is None:
                continue
            factor = coeff / lead_coeff
            for m, c in g.items():
                m = monomial_mul(m, quotient)
                value = work.get(m, 0) - factor * c
                if value == 0:
                    work.pop(m, None)
                else:
                    work[m] = value
            break
        else:
            remainder[monomial] = coeff
            del work[monomial]
    return Polynomial(p.nvars, remainder)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Return the S-polynomial of f and g."""
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = monomial_lcm(lmf, lmg)
    return f.mul_term(monomial_div(lcm, lmf), 1 / lcf) - g.mul_term(monomial_div(lcm, lmg), 1 / lcg)


def _update(G: List[Polynomial], lmG: List[Monomial], P: Set[Pair], f: Polynomial,
            order: MonomialOrder) -> Tuple[List[Polynomial], List[Monomial], Set[Pair]]:
    """Add f to the basis and update the pair set with the Gebauer-Moeller criteria."""
    lmf = f.leading_monomial(order)
    new = len(G)

    # chain criterion on old pairs
    kept = set()
    for i, j in P:
        lcm_ij = monomial_lcm(lmG[i], lmG[j])
        if (not monomial_divides(lmf, lcm_ij)
                or lcm_ij == monomial_lcm(lmG[i], lmf)
                or lcm_ij == monomial_lcm(lmG[j], lmf)):
            kept.add((i, j))

    # one pair per minimal lcm, none where the product criterion applies
    by_lcm: Dict[Monomial, List[int]] = {}
    for i in range(new):
        by_lcm.setdefault(monomial_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for lcm in order.sorted(by_lcm):
        if all(not monomial_divides(other, lcm) for other in minimal):
            minimal.append(lcm)
    fresh = set()
    for lcm in minimal:
        if not any(lcm == monomial_mul(lmG[i], lmf) for i in by_lcm[lcm]):
            fresh.add((min(by_lcm[lcm]), new))

    return G + [f], lmG + [lmf], kept | fresh


def _select(lmG: List[Monomial], P: Set[Pair], order: MonomialOrder) -> Pair:
    """Normal strategy: the pair with the smallest lcm, ties broken by index."""
    return min(P, key=lambda p: (order.key(monomial_lcm(lmG[p[0]], lmG[p[1]])), p))


def minimalize(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Return a minimal Groebner basis from an arbitrary Groebner basis G."""
    minimal: List[Polynomial] = []
    for f in sorted(G, key=lambda h: order.key(h.leading_monomial(order))):
        lmf = f.leading_monomial(order)
        if all(not monomial_divides(g.leading_monomial(order), lmf) for g in minimal):
            minimal.append(f)
    return minimal


def interreduce(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    reduced = []
    for i, g in enumerate(G):
        lead, coeff = g.leading_term(order)
        tail = reduce(g - Polynomial(g.nvars, {lead: coeff}), list(G[:i]) + list(G[i + 1:]), order)
        reduced.append((Polynomial(g.nvars, {lead: coeff}) + tail).monic(order))
    return sorted(reduced, key=lambda h: order.key(h.leading_monomial(order)))


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder,
               max_pairs: Optional[int] = None) -> GroebnerBasis:
    """Return the reduced Groebner basis of the ideal generated by gens.

    Zero generators are dropped; an all-zero input is the zero ideal and
    yields an empty generator list.
    """
    nvars = order.nvars
    for f in gens:
        if f.nvars != nvars:
            raise DimensionMismatchException(
                f'Generator in {f.nvars} variables passed with an order on {nvars}'
            )

    G: List[Polynomial] = []
    lmG: List[Monomial] = []
    P: Set[Pair] = set()
    for f in gens:
        if not f.is_zero():
            G, lmG, P = _update(G, lmG, P, f.monic(order), order)

    processed = 0
    while P:
        if max_pairs is not None and processed >= max_pairs:
            raise StepLimitExceededException(
                f'Buchberger exceeded its budget of {max_pairs} S-pairs with {len(P)} pairs pending'
            )
        i, j = _select(lmG, P, order)
        P.remove((i, j))
        processed += 1
        r = reduce(spoly(G[i], G[j], order), G, order)
        if not r.is_zero():
            G, lmG, P = _update(G, lmG, P, r.monic(order), order)

    logger.debug(f"Buchberger processed {processed} S-pairs, {len(G)} polynomials before reduction")
    return GroebnerBasis(nvars, order, interreduce(minimalize(G, order), order), reduced=True)


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Every S-polynomial reduces to zero modulo G."""
    G = [g for g in G if not g.is_zero()]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not reduce(spoly(G[i], G[j], order), G, order).is_zero():
                return False
    return True


def is_reduced(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Monic, and no monomial of any p lies in LT(G without p)."""
    leads = [g.leading_term(order) for g in G]
    if any(coeff != 1 for _, coeff in leads):
        return False
    for i, g in enumerate(G):
        others = [lead for j, (lead, _) in enumerate(leads) if j != i]
        for monomial in g.monomials():
            if any(monomial_divides(lead, monomial) for lead in others):
                return False
    return True
