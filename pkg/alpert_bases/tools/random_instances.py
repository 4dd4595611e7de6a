"""Random instances for property checks.

Every generator takes a numpy Generator, so a fixed seed reproduces the
same measures and families.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ..models.dyadic import DyadicCube
from ..models.measure import Measure
from ..models.polynomial import Polynomial, f_n_k
from ..models.spaces import FunctionFamily


def random_points(rng: np.random.Generator, cube: DyadicCube, count: int,
                  resolution: int = 4) -> List[Tuple[Fraction, ...]]:
    """Distinct points of the cube on the grid of spacing side / 2^resolution."""
    cells = 2 ** resolution
    capacity = cells ** cube.nvars
    count = min(count, capacity)
    chosen = rng.choice(capacity, size=count, replace=False)
    side = cube.side
    points = []
    for index in sorted(int(i) for i in chosen):
        offsets = []
        for _ in range(cube.nvars):
            index, offset = divmod(index, cells)
            offsets.append(offset)
        points.append(tuple(c * side + Fraction(o, cells) * side for c, o in zip(cube.coords, offsets)))
    return points


def random_atomic_measure(rng: np.random.Generator, cube: DyadicCube, count: int,
                          resolution: int = 4, max_weight: int = 3) -> Measure:
    """Atomic measure with integer weights in 1..max_weight on random grid points."""
    points = random_points(rng, cube, count, resolution)
    weights = [Fraction(int(w)) for w in rng.integers(1, max_weight + 1, size=len(points))]
    return Measure.atomic(points, weights)


def random_polynomial(rng: np.random.Generator, nvars: int, max_degree: int, scale: int = 3,
                      density: float = 0.6) -> Polynomial:
    """Nonzero polynomial of degree <= max_degree with small integer coefficients."""
    monomials = f_n_k(nvars, max_degree + 1)
    while True:
        terms = {}
        for m in monomials:
            if rng.random() < density:
                terms[m] = Fraction(int(rng.integers(-scale, scale + 1)))
        poly = Polynomial(nvars, terms)
        if not poly.is_zero():
            return poly


def random_family(rng: np.random.Generator, nvars: int, size: int, max_degree: int = 2,
                  include_one: bool = False, monomials_only: Optional[bool] = None) -> FunctionFamily:
    """Random family of the given size; monomial-only families with probability 1/2."""
    if monomials_only is None:
        monomials_only = bool(rng.integers(0, 2))
    members = [Polynomial.constant(nvars)] if include_one else []
    pool = f_n_k(nvars, max_degree + 1)
    while len(members) < size:
        if monomials_only:
            members.append(Polynomial.monomial(pool[int(rng.integers(0, len(pool)))]))
        else:
            members.append(random_polynomial(rng, nvars, max_degree))
    return FunctionFamily(nvars, members)


def points_on_moment_curve(count: int, nvars: int = 2) -> List[Tuple[Fraction, ...]]:
    """(t, t^2, ..., t^n) for t = i / (count + 1), inside [0, 1)^n."""
    return [
        tuple(Fraction(i, count + 1) ** (j + 1) for j in range(nvars))
        for i in range(1, count + 1)
    ]


def points_on_plane(side: int, nvars: int = 3) -> List[Tuple[Fraction, ...]]:
    """A side x side grid on the slice x_n = 1/2 of [0, 1)^n."""
    points = []
    for i in range(side):
        for j in range(side):
            point = [Fraction(i, side), Fraction(j, side)] + [Fraction(1, 2)] * (nvars - 2)
            points.append(tuple(point))
    return points
