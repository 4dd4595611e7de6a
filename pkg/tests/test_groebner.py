import itertools

import numpy as np
import pytest
import sympy

from alpert_bases import AlpertApi
from alpert_bases.errors import NonGradedOrderException, StepLimitExceededException
from alpert_bases.helpers.groebner import buchberger, reduce
from alpert_bases.helpers.parsing import from_sympy, to_sympy, variable_symbols
from alpert_bases.helpers.staircase import gdep_gind, hilbert_dimension, staircase_count, standard_monomials
from alpert_bases.models import GroebnerBasis, MonomialOrder, OrderKind, Polynomial
from alpert_bases.tools import random_polynomial


def parse_all(texts, nvars):
    return [Polynomial.parse(text, nvars) for text in texts]


def basis_of(texts, nvars, kind=OrderKind.GREVLEX):
    return buchberger(parse_all(texts, nvars), MonomialOrder(kind, nvars))


def sympy_reduced_basis(polys, nvars, kind):
    gens = variable_symbols(nvars)
    G = sympy.groebner([to_sympy(p) for p in polys], *gens, order=kind, domain='QQ')
    # monic in the requested order, not in sympy's default lex
    return {from_sympy(sympy.expand(g / sympy.LC(g, *gens, order=kind)), nvars) for g in G.exprs}


def test_single_generator():
    G = basis_of(['x2 - x1^2'], 2)
    assert G.generators == parse_all(['x1^2 - x2'], 2)


def test_reduce_by_a_curve():
    G = basis_of(['x2 - x1^2'], 2)
    assert reduce(Polynomial.parse('x1^2', 2), G.generators, G.order) == Polynomial.parse('x2', 2)
    assert G.contains(Polynomial.parse('x1^4 - x2^2', 2))
    assert not G.contains(Polynomial.parse('x1', 2))


def test_sum_and_difference_of_squares():
    G = basis_of(['x1^2 + x2^2', 'x1^2 - x2^2'], 2)
    assert set(G.generators) == set(parse_all(['x1^2', 'x2^2'], 2))


def test_unit_and_zero_ideals():
    G = basis_of(['x1', 'x1 - 1'], 1)
    assert G.is_unit_ideal
    assert G.generators == [Polynomial.constant(1)]
    assert basis_of(['0'], 2).is_zero_ideal


def test_result_is_reduced_and_groebner():
    G = basis_of(['x1^2*x2 - 1', 'x1*x2^2 - x1'], 2)
    assert G.is_groebner()
    assert G.is_reduced()


@pytest.mark.parametrize('kind', [OrderKind.GREVLEX, OrderKind.GRLEX, OrderKind.LEX])
def test_matches_sympy_on_random_ideals(kind):
    rng = np.random.default_rng(11)
    for _ in range(12):
        nvars = int(rng.integers(1, 4))
        gens = [random_polynomial(rng, nvars, 2) for _ in range(int(rng.integers(1, 4)))]
        G = buchberger(gens, MonomialOrder(kind, nvars))
        assert set(G.generators) == sympy_reduced_basis(gens, nvars, kind)


def test_invariant_under_permutation():
    gens = parse_all(['x1^2 - x2', 'x1*x2 - x3', 'x2^2 - x1*x3'], 3)
    order = MonomialOrder(OrderKind.GREVLEX, 3)
    bases = [buchberger(list(p), order).generators for p in itertools.permutations(gens)]
    assert all(b == bases[0] for b in bases)


def test_pair_budget():
    # cyclic-3 needs two new basis elements, so one S-pair cannot finish it
    gens = parse_all(['x1 + x2 + x3', 'x1*x2 + x2*x3 + x1*x3', 'x1*x2*x3 - 1'], 3)
    with pytest.raises(StepLimitExceededException):
        buchberger(gens, MonomialOrder(OrderKind.GREVLEX, 3), max_pairs=1)


def test_gdep_gind_follows_the_tie_break():
    # LT(x2 - x1) is x1 because x1 > x2
    G = basis_of(['x2 - x1'], 2)
    assert G.leading_monomials == [(1, 0)]
    gdep, gind = gdep_gind(G, 2, 3)
    assert gind == [(0, 0), (0, 1), (0, 2)]
    assert gdep == [(1, 0), (1, 1), (2, 0)]


def test_gdep_gind_rejects_lex():
    G = basis_of(['x2 - x1'], 2, OrderKind.LEX)
    with pytest.raises(NonGradedOrderException):
        gdep_gind(G, 2, 3)


@pytest.mark.parametrize('texts, expected', [
    (['x1'], 1),
    (['x1^2', 'x1*x2', 'x2^2'], 0),
    ([], 2),
    (['1'], -1),
])
def test_hilbert_dimension(texts, expected):
    G = basis_of(texts, 2)
    assert hilbert_dimension(G) == expected


def test_staircase_of_a_parabola():
    G = basis_of(['x2 - x1^2'], 2)
    for k in range(1, 9):
        assert staircase_count(G, k) == 2 * k - 1


def test_standard_monomials():
    G = basis_of(['x1^2 - x1', 'x1*x2', 'x2^2 - x2'], 2)
    assert standard_monomials(G) == [(0, 0), (0, 1), (1, 0)]


def test_service_accepts_text():
    api = AlpertApi()
    G = api.groebner.buchberger(['x1^2 - x2', 'x1*x2 - 1'], nvars=2)
    assert isinstance(G, GroebnerBasis)
    assert api.groebner.hilbert_dimension(G) == 0
    assert api.groebner.reduce('x1^3', G) == Polynomial.parse('1', 2)
