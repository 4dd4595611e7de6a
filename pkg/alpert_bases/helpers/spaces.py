"""Component spaces P_{Q,U}, Alpert spaces L^2_{Q,U,V} and their dimensions.

Every rank and orthogonality decision is made in exact rational arithmetic.
Floats only appear when an OrthoBasis is normalized.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from . import linalg
from ..errors import CubeOutsideWindowException, VerificationFailedException
from ..logging_config import get_logger
from ..models.dyadic import DyadicCube
from ..models.measure import Measure
from ..models.piecewise import PiecewisePoly
from ..models.polynomial import Polynomial
from ..models.spaces import BasisKind, DimensionReport, FunctionFamily, OrthoBasis

logger = get_logger("spaces")


def restrictions(cube: DyadicCube, members: Sequence[Polynomial]) -> List[PiecewisePoly]:
    """1_Q * p for every p."""
    return [PiecewisePoly.on_cube(cube, p) for p in members]


def gram_matrix(mu: Measure, cube: DyadicCube, fam: Sequence[PiecewisePoly]) -> List[List[Fraction]]:
    """Exact matrix of inner products <f_i, f_j> over the cube."""
    for f in fam:
        if not f.within(cube):
            raise CubeOutsideWindowException(
                f'Function with pieces {[c.to_dict() for c in f.cubes()]} is not inside {cube.to_dict()}'
            )

    size = len(fam)
    gram = [[Fraction(0)] * size for _ in range(size)]

    if mu.is_atomic:
        # evaluate each function once per atom
        atoms = mu.atoms_in(cube)
        values = [[f.evaluate(atom.point) for atom in atoms] for f in fam]
        weights = [atom.weight for atom in atoms]
        for i in range(size):
            for j in range(i, size):
                entry = sum((w * a * b for w, a, b in zip(weights, values[i], values[j])), Fraction(0))
                gram[i][j] = gram[j][i] = entry
        return gram

    for i in range(size):
        for j in range(i, size):
            gram[i][j] = gram[j][i] = mu.inner_product(cube, fam[i], fam[j])
    return gram


def component_dimension(mu: Measure, cube: DyadicCube, U: FunctionFamily) -> int:
    """dim P_{Q,U}(mu), the exact rank of the Gram matrix of 1_Q U."""
    return linalg.rank(gram_matrix(mu, cube, restrictions(cube, U.members)))


def component_basis(mu: Measure, cube: DyadicCube, U: FunctionFamily) -> List[Polynomial]:
    """Greedy maximal independent sublist of U in input order.

    Column j of the Gram matrix is a pivot exactly when 1_Q u_j is not a
    combination of the earlier restrictions.
    """
    gram = gram_matrix(mu, cube, restrictions(cube, U.members))
    return [U.members[j] for j in linalg.pivot_columns(gram)]


def combine(coeffs: Sequence[Fraction], functions: Sequence[PiecewisePoly]) -> PiecewisePoly:
    total = None
    for c, f in zip(coeffs, functions):
        if c == 0:
            continue
        term = f.scale(c)
        total = term if total is None else total + term
    return total if total is not None else PiecewisePoly.zero(functions[0].nvars if functions else 1)


def orthogonalize(mu: Measure, cube: DyadicCube, functions: Sequence[PiecewisePoly],
                  against: Sequence[Tuple[PiecewisePoly, Fraction]] = ()) -> List[Tuple[PiecewisePoly, Fraction]]:
    """Exact modified Gram-Schmidt in the mu inner product over the cube.

    Returns (function, squared norm) pairs. Functions already in the span of
    `against` and the earlier accepted ones (zero in L^2(mu)) are dropped.
    """
    basis = list(against)
    accepted = []
    for f in functions:
        v = f
        for u, norm_squared in basis:
            coeff = mu.inner_product(cube, v, u) / norm_squared
            if coeff:
                v = v - u.scale(coeff)
        norm_squared = mu.inner_product(cube, v, v)
        if norm_squared == 0:
            continue
        basis.append((v, norm_squared))
        accepted.append((v, norm_squared))
    return accepted


def make_ortho_basis(mu: Measure, cube: DyadicCube, kind: str,
                     orthogonal: Sequence[Tuple[PiecewisePoly, Fraction]]) -> OrthoBasis:
    exact = [f for f, _ in orthogonal]
    return OrthoBasis(cube, kind, exact, gram_matrix(mu, cube, exact))


def ambient_functions(mu: Measure, cube: DyadicCube, U: FunctionFamily) -> List[PiecewisePoly]:
    """Basis of L^2_{Q,U,empty}: child-major, family order within each child."""
    functions = []
    for child in cube.children():
        functions.extend(restrictions(child, component_basis(mu, child, U)))
    return functions


def _constraint_rows(mu: Measure, cube: DyadicCube, ambient: Sequence[PiecewisePoly],
                     V: FunctionFamily) -> List[List[Fraction]]:
    return [[mu.inner_product(cube, phi, v) for phi in ambient] for v in V.members]


def alpert_space_basis(mu: Measure, cube: DyadicCube, U: FunctionFamily, V: FunctionFamily,
                       kind: str = BasisKind.ALPERT) -> OrthoBasis:
    """Orthonormal basis of L^2_{Q,U,V}(mu).

    The ambient space is cut down by the exact conditions <f, 1_Q v> = 0,
    and the null space is orthogonalized in the mu inner product.
    """
    ambient = ambient_functions(mu, cube, U)
    rows = _constraint_rows(mu, cube, ambient, V)
    combos = linalg.nullspace(rows, len(ambient))
    candidates = [combine(c, ambient) for c in combos]
    basis = make_ortho_basis(mu, cube, kind, orthogonalize(mu, cube, candidates))
    logger.debug(f"Alpert space on {cube.to_dict()}: ambient {len(ambient)}, dimension {basis.dimension}")
    return basis


def component_space_basis(mu: Measure, cube: DyadicCube, U: FunctionFamily,
                          kind: str = BasisKind.COMPONENT) -> OrthoBasis:
    """Orthonormal basis of P_{Q,U}(mu)."""
    functions = restrictions(cube, component_basis(mu, cube, U))
    return make_ortho_basis(mu, cube, kind, orthogonalize(mu, cube, functions))


def complement_basis(mu: Measure, cube: DyadicCube, U_small: FunctionFamily, U_large: FunctionFamily,
                     kind: str = BasisKind.COMPLEMENT) -> OrthoBasis:
    """Orthonormal basis of P_{Q,U_large} minus (orthogonally) P_{Q,U_small}.

    An empty U_small gives a basis of the whole of P_{Q,U_large}.
    """
    small = orthogonalize(mu, cube, restrictions(cube, component_basis(mu, cube, U_small)))
    large = restrictions(cube, component_basis(mu, cube, U_large))
    return make_ortho_basis(mu, cube, kind, orthogonalize(mu, cube, large, against=small))


def project(mu: Measure, cube: DyadicCube, basis: OrthoBasis, f: PiecewisePoly) -> PiecewisePoly:
    """Orthogonal projection of 1_Q f onto the span of an OrthoBasis, exactly."""
    f = f.restrict(cube)
    terms = [
        (mu.inner_product(cube, f, b) / norm_squared, b)
        for b, norm_squared in zip(basis.exact, basis.norms_squared)
    ]
    return combine([c for c, _ in terms], [b for _, b in terms]) if terms else PiecewisePoly.zero(f.nvars)


def component_projection(mu: Measure, cube: DyadicCube, U: FunctionFamily, f: PiecewisePoly) -> PiecewisePoly:
    """E^mu_{Q,U} f."""
    return project(mu, cube, component_space_basis(mu, cube, U), f)


def alpert_projection(mu: Measure, cube: DyadicCube, U: FunctionFamily, V: FunctionFamily,
                      f: PiecewisePoly) -> PiecewisePoly:
    """Delta^mu_{Q,U,V} f."""
    return project(mu, cube, alpert_space_basis(mu, cube, U, V), f)


def dimension_report(mu: Measure, cube: DyadicCube, U: FunctionFamily, V: FunctionFamily) -> DimensionReport:
    """Dimension sandwich of L^2_{Q,U,V} with conditions imposed one at a time.

    Raises VerificationFailedException if the sandwich or, for V inside U,
    the equality actual = ambient - dim P_{Q,V} fails.
    """
    ambient = ambient_functions(mu, cube, U)
    rows = _constraint_rows(mu, cube, ambient, V)

    drops, previous = [], 0
    for i in range(len(rows)):
        current = linalg.rank(rows[:i + 1])
        drops.append(current - previous)
        previous = current

    component_v = component_dimension(mu, cube, V)
    actual = alpert_space_basis(mu, cube, U, V).dimension
    report = DimensionReport(
        cube=cube,
        ambient=len(ambient),
        lower_bound=len(ambient) - component_v,
        upper_bound=len(ambient),
        actual=actual,
        freebies=drops.count(0),
        drops=drops,
        component_v=component_v,
        v_subset_u=V.issubset(U),
    )

    if actual != len(ambient) - previous:
        raise VerificationFailedException(
            f'Alpert basis dimension {actual} disagrees with the constraint rank on {cube.to_dict()}'
        )
    if not report.lower_bound <= actual <= report.upper_bound:
        raise VerificationFailedException(
            f'Dimension {actual} escapes [{report.lower_bound}, {report.upper_bound}] on {cube.to_dict()}'
        )
    if report.v_subset_u and actual != report.lower_bound:
        raise VerificationFailedException(
            f'V is inside U but dimension {actual} differs from {report.lower_bound} on {cube.to_dict()}'
        )
    return report
