"""Dyadic cubes and finite grid windows.

A cube is stored as an integer level m and an integer coordinate vector c;
it is the half-open box prod_i [c_i * 2^m, (c_i + 1) * 2^m). Nothing is ever
stored as a floating endpoint, so membership on cube faces is exact.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .base import BaseModel
from ..errors import CubeOutsideWindowException, DimensionMismatchException, InvalidArgumentException


@dataclass(frozen=True)
class DyadicCube(BaseModel):
    level: int = 0
    coords: Tuple[int, ...] = ()

    def __post_init__(self):
        # lists coming from JSON are frozen into tuples
        object.__setattr__(self, 'coords', tuple(int(c) for c in self.coords))

    @property
    def nvars(self) -> int:
        return len(self.coords)

    @property
    def side(self) -> Fraction:
        return Fraction(2) ** self.level

    @property
    def volume(self) -> Fraction:
        return self.side ** self.nvars

    def bounds(self) -> List[Tuple[Fraction, Fraction]]:
        """Lower (included) and upper (excluded) endpoint per axis."""
        side = self.side
        return [(c * side, (c + 1) * side) for c in self.coords]

    def children(self) -> List['DyadicCube']:
        """The 2^n children, first coordinate offset varying fastest."""
        children = []
        for offsets in itertools.product((0, 1), repeat=self.nvars):
            offsets = offsets[::-1]
            coords = tuple(2 * c + o for c, o in zip(self.coords, offsets))
            children.append(DyadicCube(self.level - 1, coords))
        return children

    def parent(self) -> 'DyadicCube':
        # >> floors for negative coordinates as well
        return DyadicCube(self.level + 1, tuple(c >> 1 for c in self.coords))

    def ancestor(self, level: int) -> 'DyadicCube':
        if level < self.level:
            raise InvalidArgumentException(
                f'Cannot ascend from level {self.level} to finer level {level}'
            )
        shift = level - self.level
        return DyadicCube(level, tuple(c >> shift for c in self.coords))

    def contains(self, other: 'DyadicCube') -> bool:
        """Whether other is a (non-strict) subcube of this cube."""
        _check_nvars(self, other)
        return other.level <= self.level and other.ancestor(self.level) == self

    def strictly_contains(self, other: 'DyadicCube') -> bool:
        return other.level < self.level and self.contains(other)

    def intersection(self, other: 'DyadicCube') -> Optional['DyadicCube']:
        """Dyadic cubes are nested or disjoint, so the overlap is a cube or None."""
        if self.contains(other):
            return other
        if other.contains(self):
            return self
        return None

    def contains_point(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.nvars:
            raise DimensionMismatchException(
                f'Point of length {len(point)} tested against a cube in {self.nvars} variables'
            )
        side = self.side
        return all(math.floor(Fraction(x) / side) == c for x, c in zip(point, self.coords))

    def sort_key(self) -> Tuple:
        """Coarse-to-fine, then by coordinates."""
        return (-self.level, self.coords)

    def to_dict(self):
        return {'level': self.level, 'coords': list(self.coords)}


def cube_containing(point: Sequence[Fraction], level: int) -> DyadicCube:
    side = Fraction(2) ** level
    return DyadicCube(level, tuple(math.floor(Fraction(x) / side) for x in point))


def _check_nvars(first: DyadicCube, second: DyadicCube) -> None:
    if first.nvars != second.nvars:
        raise DimensionMismatchException(
            f'Cubes in {first.nvars} and {second.nvars} variables cannot be compared'
        )


@dataclass
class GridWindow(BaseModel):
    """Finite truncation of the dyadic grid.

    Root cubes live at max_level and stand in for the tops of the grid;
    min_level is the finest resolution that is ever enumerated.
    """
    min_level: int = 0
    max_level: int = 0
    roots: List[DyadicCube] = field(default_factory=list)

    def __post_init__(self):
        if self.min_level > self.max_level:
            raise InvalidArgumentException(
                f'min_level {self.min_level} exceeds max_level {self.max_level}'
            )
        for root in self.roots:
            if root.level != self.max_level:
                raise InvalidArgumentException(
                    f'Root cube {root.to_dict()} is not at max_level {self.max_level}'
                )
        if len(set(self.roots)) != len(self.roots):
            raise InvalidArgumentException('Root cubes must be pairwise distinct')
        if len({root.nvars for root in self.roots}) > 1:
            raise DimensionMismatchException('Root cubes must share the number of variables')

    @property
    def nvars(self) -> int:
        return self.roots[0].nvars if self.roots else 0

    def root_of(self, cube: DyadicCube) -> Optional[DyadicCube]:
        if cube.level > self.max_level or cube.nvars != self.nvars:
            return None
        candidate = cube.ancestor(self.max_level)
        return candidate if candidate in self.roots else None

    def contains(self, cube: DyadicCube) -> bool:
        return self.min_level <= cube.level <= self.max_level and self.root_of(cube) is not None

    def tower(self, cube: DyadicCube) -> List[DyadicCube]:
        """The chain cube, parent(cube), ... up to its root cube."""
        if not self.contains(cube):
            raise CubeOutsideWindowException(f'Cube {cube.to_dict()} lies outside the grid window')
        chain = [cube]
        while chain[-1].level < self.max_level:
            chain.append(chain[-1].parent())
        return chain

    def cubes_at(self, level: int) -> List[DyadicCube]:
        if not self.min_level <= level <= self.max_level:
            return []
        cubes = list(self.roots)
        for _ in range(self.max_level - level):
            cubes = [child for cube in cubes for child in cube.children()]
        return sorted(cubes, key=DyadicCube.sort_key)

    def cubes(self) -> Iterator[DyadicCube]:
        """Every cube of the window, coarse to fine."""
        for level in range(self.max_level, self.min_level - 1, -1):
            yield from self.cubes_at(level)

    def to_dict(self):
        return {
            'min_level': self.min_level,
            'max_level': self.max_level,
            'roots': [root.to_dict() for root in self.roots],
        }
