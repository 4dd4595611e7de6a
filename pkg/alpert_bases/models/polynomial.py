"""Exact multivariate polynomials, monomials and graded monomial orders.

Monomials are exponent tuples. Variables are named x1, ..., xn and the
tie-break convention is x1 > x2 > ... > xn in every order.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Number
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .base import BaseModel
from ..errors import DimensionMismatchException, InvalidArgumentException, ZeroPolynomialException

Monomial = Tuple[int, ...]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def monomial_divides(u: Monomial, v: Monomial) -> bool:
    """u | v, i.e. componentwise u <= v."""
    return all(a <= b for a, b in zip(u, v))


def monomial_div(v: Monomial, u: Monomial) -> Optional[Monomial]:
    """v / u, or None when u does not divide v."""
    if not monomial_divides(u, v):
        return None
    return tuple(b - a for a, b in zip(u, v))


def monomial_lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def monomial_support(m: Monomial) -> int:
    """Bitmask of the variables that occur in m."""
    mask = 0
    for i, a in enumerate(m):
        if a:
            mask |= 1 << i
    return mask


class OrderKind:
    GRLEX = 'grlex'
    GREVLEX = 'grevlex'
    LEX = 'lex'


class Comparison:
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class MonomialOrder(BaseModel):
    kind: str = OrderKind.GREVLEX
    nvars: int = 1

    def __post_init__(self):
        if self.kind not in (OrderKind.GRLEX, OrderKind.GREVLEX, OrderKind.LEX):
            raise InvalidArgumentException(f'Unknown monomial order: {self.kind}')
        if self.nvars < 1:
            raise InvalidArgumentException(f'A monomial order needs at least one variable, got {self.nvars}')

    @property
    def is_graded(self) -> bool:
        return self.kind != OrderKind.LEX

    def key(self, m: Monomial) -> Tuple:
        """Sort key: a larger key means a larger monomial."""
        if self.kind == OrderKind.GRLEX:
            return (sum(m),) + tuple(m)
        if self.kind == OrderKind.GREVLEX:
            return (sum(m),) + tuple(-a for a in reversed(m))
        return tuple(m)

    def compare(self, u: Monomial, v: Monomial) -> int:
        if len(u) != self.nvars or len(v) != self.nvars:
            raise DimensionMismatchException(
                f'Monomials {u} and {v} do not live in {self.nvars} variables'
            )
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return Comparison.LESS
        if ku > kv:
            return Comparison.GREATER
        return Comparison.EQUAL

    def sorted(self, monomials: Iterable[Monomial], reverse: bool = False) -> List[Monomial]:
        return sorted(monomials, key=self.key, reverse=reverse)


def f_n_k(n: int, k: int, order: Optional[MonomialOrder] = None) -> List[Monomial]:
    """All monomials in n variables of degree < k, ascending in the order.

    There are comb(n + k - 1, n) of them.
    """
    if n < 1 or k < 0:
        raise InvalidArgumentException(f'f_n_k needs n >= 1 and k >= 0, got n={n}, k={k}')
    order = order or MonomialOrder(OrderKind.GREVLEX, n)
    monomials = [m for m in itertools.product(range(k), repeat=n) if sum(m) < k]
    return order.sorted(monomials)


def f_n_k_size(n: int, k: int) -> int:
    return comb(n + k - 1, n)


class Polynomial:
    """Polynomial with exact (Fraction) or, after normalization, float coefficients.

    The term map never stores zero coefficients, so the zero polynomial is
    the empty map and equal polynomials have equal term maps.
    """

    __slots__ = ('nvars', '_terms', '_hash')

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, Number]] = None):
        if nvars < 1:
            raise InvalidArgumentException(f'Polynomials need at least one variable, got {nvars}')
        self.nvars = nvars
        clean: Dict[Monomial, Number] = {}
        for monomial, coeff in (terms or {}).items():
            monomial = tuple(int(a) for a in monomial)
            if len(monomial) != nvars or any(a < 0 for a in monomial):
                raise InvalidArgumentException(f'Invalid exponent vector {monomial} for {nvars} variables')
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            if coeff != 0:
                clean[monomial] = clean.get(monomial, 0) + coeff
                if clean[monomial] == 0:
                    del clean[monomial]
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> 'Polynomial':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Number = 1) -> 'Polynomial':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Number = 1) -> 'Polynomial':
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> 'Polynomial':
        """x_{index+1}, zero-based index."""
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @classmethod
    def parse(cls, text: str, nvars: int) -> 'Polynomial':
        from ..helpers.parsing import parse_polynomial
        return parse_polynomial(text, nvars)

    # accessors

    @property
    def terms(self) -> Dict[Monomial, Number]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, monomial: Monomial) -> Number:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._terms.values())

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def leading_term(self, order: MonomialOrder) -> Tuple[Monomial, Number]:
        if not self._terms:
            raise ZeroPolynomialException('The zero polynomial has no leading term')
        self._check(order)
        monomial = max(self._terms, key=order.key)
        return monomial, self._terms[monomial]

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder) -> 'Polynomial':
        _, coeff = self.leading_term(order)
        return self.scale(1 / coeff)

    def evaluate(self, point: Sequence[Number]) -> Number:
        if len(point) != self.nvars:
            raise DimensionMismatchException(
                f'Point of length {len(point)} given to a polynomial in {self.nvars} variables'
            )
        total = Fraction(0)
        for monomial, coeff in self._terms.items():
            value = coeff
            for x, a in zip(point, monomial):
                if a:
                    value = value * x ** a
            total = total + value
        return total

    # arithmetic

    def _check(self, other) -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatchException(
                f'Cannot combine objects in {self.nvars} and {other.nvars} variables'
            )

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for monomial, coeff in other._terms.items():
            terms[monomial] = terms.get(monomial, 0) + coeff
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> 'Polynomial':
        return Polynomial(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            self._check(other)
            terms: Dict[Monomial, Number] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = monomial_mul(m1, m2)
                    terms[m] = terms.get(m, 0) + c1 * c2
            return Polynomial(self.nvars, terms)
        if isinstance(other, Number):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'Polynomial':
        return Polynomial(self.nvars, {m: c * factor for m, c in self._terms.items()})

    def mul_term(self, monomial: Monomial, coeff: Number = 1) -> 'Polynomial':
        return Polynomial(self.nvars, {monomial_mul(m, monomial): c * coeff for m, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.nvars, self._terms)

    def __setstate__(self, state):
        self.nvars, self._terms = state
        self._hash = None

    # text

    def to_text(self, order: Optional[MonomialOrder] = None) -> str:
        """Render as e.g. "1/2*x1^2 - x2", terms in decreasing order."""
        from ..helpers.rationals import format_rational

        if not self._terms:
            return '0'
        order = order or MonomialOrder(OrderKind.GREVLEX, self.nvars)
        pieces = []
        for monomial in order.sorted(self._terms, reverse=True):
            coeff = self._terms[monomial]
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            factors = []
            for i, a in enumerate(monomial):
                if a == 1:
                    factors.append(f'x{i + 1}')
                elif a > 1:
                    factors.append(f'x{i + 1}^{a}')
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([format_rational(magnitude)] + factors)
            if not pieces:
                pieces.append(f'-{body}' if negative else body)
            else:
                pieces.append(f'- {body}' if negative else f'+ {body}')
        return ' '.join(pieces)

    def __repr__(self) -> str:
        return f'Polynomial({self.to_text()!r}, nvars={self.nvars})'


class ArithOp:
    ADD = 'add'
    SUB = 'sub'
    MUL = 'mul'
    SCALE = 'scale'


def arith(p: Polynomial, q, op: str) -> Polynomial:
    """Dispatch a ring operation by name; for 'scale' q is the scalar."""
    if op == ArithOp.ADD:
        return p + q
    if op == ArithOp.SUB:
        return p - q
    if op == ArithOp.MUL:
        if not isinstance(q, Polynomial):
            raise InvalidArgumentException('mul expects two polynomials; use scale for scalars')
        return p * q
    if op == ArithOp.SCALE:
        return p.scale(q)
    raise InvalidArgumentException(f'Unknown polynomial operation: {op}')
