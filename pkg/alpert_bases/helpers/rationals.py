from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple, Union

from ..errors.exceptions import InvalidArgumentException

RationalLike = Union[str, int, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    """Parse a rational literal ("p/q", "p", an int or a Fraction)."""
    if isinstance(value, bool):
        raise InvalidArgumentException('Booleans are not rational literals: ' + str(value))

    if isinstance(value, Rational):
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as error:
            raise InvalidArgumentException('Invalid rational literal: ' + repr(value)) from error

    # floats are rejected
    raise InvalidArgumentException('Rational literals must be strings or integers: ' + repr(value))


def to_point(values: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    return tuple(to_rational(value) for value in values)


def format_rational(value) -> str:
    """Render a coefficient as "p/q" or "p". Floats fall back to repr."""
    if isinstance(value, Rational):
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f'{value.numerator}/{value.denominator}'
    return repr(float(value))
