"""Concretely representable measures and exact inner products over cubes.

Two kinds are supported: finite atomic measures and piecewise-constant
densities on finitely many disjoint dyadic boxes. Both give exact rational
inner products for rational piecewise polynomials.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Number
from typing import List, Tuple, Union

from .base import BaseModel
from .dyadic import DyadicCube
from .piecewise import PiecewisePoly
from .polynomial import Polynomial
from ..errors import CubeOutsideWindowException, DimensionMismatchException, InvalidArgumentException


class MeasureKind:
    ATOMIC = 'atomic'
    UNIFORM_BOXES = 'uniform_boxes'


@dataclass(frozen=True)
class Atom(BaseModel):
    point: Tuple[Fraction, ...] = ()
    weight: Fraction = Fraction(1)


@dataclass(frozen=True)
class Box(BaseModel):
    cube: DyadicCube = field(default_factory=DyadicCube)
    density: Fraction = Fraction(1)


@dataclass
class Measure(BaseModel):
    nvars: int = 1
    kind: str = MeasureKind.ATOMIC
    atoms: List[Atom] = field(default_factory=list)
    boxes: List[Box] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in (MeasureKind.ATOMIC, MeasureKind.UNIFORM_BOXES):
            raise InvalidArgumentException(f'Unknown measure kind: {self.kind}')
        if self.nvars < 1:
            raise InvalidArgumentException(f'Measures need at least one variable, got {self.nvars}')

        if self.kind == MeasureKind.ATOMIC:
            if self.boxes:
                raise InvalidArgumentException('Atomic measures cannot carry boxes')
            points = set()
            for atom in self.atoms:
                if len(atom.point) != self.nvars:
                    raise DimensionMismatchException(f'Atom {atom.point} is not in {self.nvars} variables')
                if atom.weight <= 0:
                    raise InvalidArgumentException(f'Atom weights must be positive, got {atom.weight}')
                if atom.point in points:
                    raise InvalidArgumentException(f'Duplicate atom at {atom.point}')
                points.add(atom.point)
        else:
            if self.atoms:
                raise InvalidArgumentException('Box measures cannot carry atoms')
            for i, box in enumerate(self.boxes):
                if box.cube.nvars != self.nvars:
                    raise DimensionMismatchException(f'Box {box.cube.to_dict()} is not in {self.nvars} variables')
                if box.density <= 0:
                    raise InvalidArgumentException(f'Box densities must be positive, got {box.density}')
                for other in self.boxes[i + 1:]:
                    if box.cube.intersection(other.cube) is not None:
                        raise InvalidArgumentException(
                            f'Boxes {box.cube.to_dict()} and {other.cube.to_dict()} overlap'
                        )

    @classmethod
    def atomic(cls, points, weights=None) -> 'Measure':
        points = [tuple(Fraction(x) for x in p) for p in points]
        weights = weights or [Fraction(1)] * len(points)
        if not points:
            raise InvalidArgumentException('Use Measure(nvars=n) for an empty atomic measure')
        atoms = [Atom(p, Fraction(w)) for p, w in zip(points, weights)]
        return cls(len(points[0]), MeasureKind.ATOMIC, atoms)

    @classmethod
    def uniform(cls, cubes, densities=None) -> 'Measure':
        cubes = list(cubes)
        if not cubes:
            raise InvalidArgumentException('Use Measure(nvars=n, kind="uniform_boxes") for an empty box measure')
        densities = densities or [Fraction(1)] * len(cubes)
        boxes = [Box(c, Fraction(d)) for c, d in zip(cubes, densities)]
        return cls(cubes[0].nvars, MeasureKind.UNIFORM_BOXES, boxes=boxes)

    @property
    def is_atomic(self) -> bool:
        return self.kind == MeasureKind.ATOMIC

    def atoms_in(self, cube: DyadicCube) -> List[Atom]:
        self._check_cube(cube)
        return [atom for atom in self.atoms if cube.contains_point(atom.point)]

    def regions(self, cube: DyadicCube) -> List[Tuple[DyadicCube, Fraction]]:
        """Box pieces meeting the cube, clipped to it, with their densities."""
        self._check_cube(cube)
        regions = []
        for box in self.boxes:
            overlap = box.cube.intersection(cube)
            if overlap is not None:
                regions.append((overlap, box.density))
        return regions

    def mass(self, cube: DyadicCube) -> Fraction:
        if self.is_atomic:
            return sum((atom.weight for atom in self.atoms_in(cube)), Fraction(0))
        return sum((density * region.volume for region, density in self.regions(cube)), Fraction(0))

    def total_mass(self) -> Fraction:
        if self.is_atomic:
            return sum((atom.weight for atom in self.atoms), Fraction(0))
        return sum((box.density * box.cube.volume for box in self.boxes), Fraction(0))

    def support_cubes(self, level: int) -> List[DyadicCube]:
        """Cubes at the given level that carry positive mass."""
        from .dyadic import cube_containing

        cubes = set()
        if self.is_atomic:
            cubes = {cube_containing(atom.point, level) for atom in self.atoms}
        else:
            for box in self.boxes:
                if box.cube.level <= level:
                    cubes.add(box.cube.ancestor(level))
                else:
                    cubes.update(_descendants(box.cube, level))
        return sorted(cubes, key=DyadicCube.sort_key)

    def restrict(self, cube: DyadicCube) -> 'Measure':
        if self.is_atomic:
            return Measure(self.nvars, self.kind, atoms=self.atoms_in(cube))
        return Measure(self.nvars, self.kind, boxes=[Box(r, d) for r, d in self.regions(cube)])

    def inner_product(self, cube: DyadicCube, f, g) -> Number:
        """Exact value of the integral over the cube of f * g d(mu).

        f and g are PiecewisePoly; a bare Polynomial p stands for 1_cube * p.

        Raises:
            CubeOutsideWindowException: If a piece of f or g is not a subcube of cube.
        """
        self._check_cube(cube)
        f = self._nested(cube, self._as_piecewise(cube, f))
        g = self._nested(cube, self._as_piecewise(cube, g))
        total = Fraction(0)

        if self.is_atomic:
            for atom in self.atoms_in(cube):
                value_f = f.evaluate(atom.point)
                if value_f == 0:
                    continue
                total += atom.weight * value_f * g.evaluate(atom.point)
            return total

        product = f * g
        if product.is_zero():
            return total
        for region, density in self.regions(cube):
            for piece, poly in product.restrict(region).items():
                total += density * integrate_over_cube(poly, piece)
        return total

    def norm_squared(self, cube: DyadicCube, f) -> Number:
        return self.inner_product(cube, f, f)

    def _as_piecewise(self, cube: DyadicCube, f: Union[PiecewisePoly, Polynomial]) -> PiecewisePoly:
        if isinstance(f, Polynomial):
            f = PiecewisePoly.on_cube(cube, f)
        if f.nvars != self.nvars:
            raise DimensionMismatchException(
                f'Function in {f.nvars} variables integrated against a measure in {self.nvars}'
            )
        return f

    @staticmethod
    def _nested(cube: DyadicCube, f: PiecewisePoly) -> PiecewisePoly:
        for piece in f.cubes():
            if not cube.contains(piece):
                raise CubeOutsideWindowException(
                    f'Piece on {piece.to_dict()} is not nested in {cube.to_dict()}; restrict it first'
                )
        return f

    def _check_cube(self, cube: DyadicCube) -> None:
        if cube.nvars != self.nvars:
            raise DimensionMismatchException(
                f'Cube {cube.to_dict()} used with a measure in {self.nvars} variables'
            )

    def to_dict(self):
        data = {'nvars': self.nvars, 'kind': self.kind}
        if self.is_atomic:
            data['atoms'] = [atom.to_dict() for atom in self.atoms]
        else:
            data['boxes'] = [box.to_dict() for box in self.boxes]
        return data


def integrate_monomial(exponents, cube: DyadicCube) -> Fraction:
    """prod_i (b_i^(a_i+1) - a_i^(a_i+1)) / (a_i+1) over the half-open cube."""
    value = Fraction(1)
    for a, (lower, upper) in zip(exponents, cube.bounds()):
        value *= (upper ** (a + 1) - lower ** (a + 1)) / (a + 1)
    return value


def integrate_over_cube(poly: Polynomial, cube: DyadicCube) -> Number:
    total = Fraction(0)
    for monomial, coeff in poly.items():
        total += coeff * integrate_monomial(monomial, cube)
    return total


def _descendants(cube: DyadicCube, level: int) -> List[DyadicCube]:
    cubes = [cube]
    for _ in range(cube.level - level):
        cubes = [child for c in cubes for child in c.children()]
    return cubes
