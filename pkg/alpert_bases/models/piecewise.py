"""Piecewise polynomials over disjoint dyadic cubes."""

from numbers import Number
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .dyadic import DyadicCube
from .polynomial import Polynomial
from ..errors import DimensionMismatchException, InvalidArgumentException


class PiecewisePoly:
    """The function sum_C 1_C * p_C over pairwise disjoint dyadic cubes C.

    Zero pieces are dropped, so the zero function is the empty map.
    Sums and products first refine both operands to a common set of cubes.
    """

    __slots__ = ('nvars', '_pieces')

    def __init__(self, nvars: int, pieces: Optional[Mapping[DyadicCube, Polynomial]] = None,
                 check: bool = True):
        self.nvars = nvars
        clean = {}
        for cube, poly in (pieces or {}).items():
            if cube.nvars != nvars or poly.nvars != nvars:
                raise DimensionMismatchException(
                    f'Piece on {cube.to_dict()} does not live in {nvars} variables'
                )
            if not poly.is_zero():
                clean[cube] = poly
        if check:
            _check_disjoint(clean)
        self._pieces = clean

    @classmethod
    def zero(cls, nvars: int) -> 'PiecewisePoly':
        return cls(nvars)

    @classmethod
    def on_cube(cls, cube: DyadicCube, poly: Polynomial) -> 'PiecewisePoly':
        """1_cube * poly."""
        return cls(poly.nvars, {cube: poly})

    @property
    def pieces(self) -> Dict[DyadicCube, Polynomial]:
        return dict(self._pieces)

    def items(self):
        return self._pieces.items()

    def cubes(self) -> List[DyadicCube]:
        return list(self._pieces)

    def is_zero(self) -> bool:
        return not self._pieces

    def is_exact(self) -> bool:
        return all(poly.is_exact() for poly in self._pieces.values())

    def evaluate(self, point: Sequence[Number]) -> Number:
        for cube, poly in self._pieces.items():
            if cube.contains_point(point):
                return poly.evaluate(point)
        return 0

    def restrict(self, cube: DyadicCube) -> 'PiecewisePoly':
        """1_cube * self; pieces containing the cube are clipped to it."""
        pieces = {}
        for piece, poly in self._pieces.items():
            overlap = piece.intersection(cube)
            if overlap is not None:
                pieces[overlap] = poly
        return PiecewisePoly(self.nvars, pieces, check=False)

    def within(self, cube: DyadicCube) -> bool:
        return all(cube.contains(piece) for piece in self._pieces)

    def refined_against(self, cubes: Iterable[DyadicCube]) -> Dict[DyadicCube, Polynomial]:
        """Split pieces until none strictly contains any of the given cubes."""
        targets = list(cubes)
        result = {}
        stack = list(self._pieces.items())
        while stack:
            cube, poly = stack.pop()
            if any(cube.strictly_contains(target) for target in targets):
                stack.extend((child, poly) for child in cube.children())
            else:
                result[cube] = poly
        return result

    def _common(self, other: 'PiecewisePoly') -> Tuple[Dict, Dict]:
        if other.nvars != self.nvars:
            raise DimensionMismatchException(
                f'Cannot combine functions in {self.nvars} and {other.nvars} variables'
            )
        return self.refined_against(other._pieces), other.refined_against(self._pieces)

    def __add__(self, other: 'PiecewisePoly') -> 'PiecewisePoly':
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        if not other._pieces:
            return self
        if not self._pieces:
            return other
        mine, theirs = self._common(other)
        for cube, poly in theirs.items():
            mine[cube] = mine[cube] + poly if cube in mine else poly
        return PiecewisePoly(self.nvars, mine, check=False)

    def __neg__(self) -> 'PiecewisePoly':
        return PiecewisePoly(self.nvars, {cube: -poly for cube, poly in self._pieces.items()}, check=False)

    def __sub__(self, other: 'PiecewisePoly') -> 'PiecewisePoly':
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> 'PiecewisePoly':
        if isinstance(other, PiecewisePoly):
            mine, theirs = self._common(other)
            return PiecewisePoly(
                self.nvars,
                {cube: poly * theirs[cube] for cube, poly in mine.items() if cube in theirs},
                check=False,
            )
        if isinstance(other, Number):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, factor: Number) -> 'PiecewisePoly':
        return PiecewisePoly(
            self.nvars, {cube: poly.scale(factor) for cube, poly in self._pieces.items()}, check=False
        )

    def same_function(self, other: 'PiecewisePoly') -> bool:
        """Equality as functions, independent of how the pieces are cut."""
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._pieces == other._pieces

    def __hash__(self):
        return hash((self.nvars, frozenset(self._pieces.items())))

    def __getstate__(self):
        return (self.nvars, self._pieces)

    def __setstate__(self, state):
        self.nvars, self._pieces = state

    def to_records(self) -> List[Dict]:
        return [
            {'cube': cube.to_dict(), 'poly': poly.to_text()}
            for cube, poly in sorted(self._pieces.items(), key=lambda item: item[0].sort_key())
        ]

    def __repr__(self) -> str:
        return f'PiecewisePoly({self.to_records()!r})'


def _check_disjoint(pieces: Mapping[DyadicCube, Polynomial]) -> None:
    cubes = sorted(pieces, key=DyadicCube.sort_key)
    for i, first in enumerate(cubes):
        for second in cubes[i + 1:]:
            if first.intersection(second) is not None:
                raise InvalidArgumentException(
                    f'Pieces {first.to_dict()} and {second.to_dict()} overlap'
                )
