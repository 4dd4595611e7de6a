"""Polynomial text parsing.

Polynomials are written over the variables x1, ..., xn with rational
coefficients, e.g. "1/2*x1^2 - x2". Parsing is delegated to sympy so that
any arithmetic sympy accepts (products, powers with ^ or **, parentheses)
is accepted as long as the result is a polynomial with rational coefficients.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..errors import InvalidArgumentException
from ..logging_config import get_logger
from ..models.polynomial import Polynomial

logger = get_logger("parsing")

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@lru_cache(maxsize=None)
def _symbols(nvars: int) -> Tuple[sympy.Symbol, ...]:
    return tuple(sympy.Symbol(f'x{i + 1}') for i in range(nvars))


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    if not isinstance(text, str) or not text.strip():
        raise InvalidArgumentException(f'Polynomial text must be a non-empty string: {text!r}')

    gens = _symbols(nvars)
    local_dict: Dict[str, sympy.Symbol] = {str(g): g for g in gens}

    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=_TRANSFORMATIONS, evaluate=True)
        poly = sympy.Poly(expr, *gens, domain='QQ')
    except Exception as error:
        logger.error(f"Cannot parse polynomial {text!r}: {error}")
        raise InvalidArgumentException(f'Invalid polynomial text {text!r}: {error}') from error

    terms = {}
    for monomial, coeff in poly.terms():
        rational = sympy.Rational(coeff)
        terms[tuple(monomial)] = Fraction(int(rational.p), int(rational.q))
    return Polynomial(nvars, terms)


def from_sympy(expr, nvars: int) -> Polynomial:
    """Convert a sympy expression or Poly over x1..xn into a Polynomial."""
    poly = sympy.Poly(expr, *_symbols(nvars), domain='QQ')
    terms = {}
    for monomial, coeff in poly.terms():
        rational = sympy.Rational(coeff)
        terms[tuple(monomial)] = Fraction(int(rational.p), int(rational.q))
    return Polynomial(nvars, terms)


def to_sympy(p: Polynomial):
    """Sympy expression of an exact polynomial, used by oracle checks."""
    gens = _symbols(p.nvars)
    expr = sympy.Integer(0)
    for monomial, coeff in p.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for g, a in zip(gens, monomial):
            term *= g ** a
        expr += term
    return expr


def variable_symbols(nvars: int) -> Tuple[sympy.Symbol, ...]:
    return _symbols(nvars)
