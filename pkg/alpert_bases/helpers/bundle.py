"""Assembly and verification of the variable Alpert basis over a grid window."""

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .spaces import alpert_space_basis, complement_basis, component_space_basis, project
from ..errors import (
    CubeOutsideWindowException,
    HypothesisViolatedException,
    InvalidArgumentException,
    InvalidAssignmentException,
)
from ..logging_config import get_logger
from ..models.bundle import BasisBundle
from ..models.dyadic import DyadicCube, GridWindow
from ..models.families import AssignmentReport, AssignmentViolation, FamilyAssignment, ViolationReason
from ..models.measure import Measure
from ..models.piecewise import PiecewisePoly
from ..models.polynomial import Polynomial
from ..models.reports import CompletenessResult, OrthogonalityResult, TelescopingResult
from ..models.spaces import BasisKind, FunctionFamily, OrthoBasis

logger = get_logger("bundle")


def charged_cubes(mu: Measure, window: GridWindow) -> List[DyadicCube]:
    """Window cubes of positive mass, coarse to fine."""
    if window.nvars != mu.nvars:
        raise InvalidArgumentException(
            f'Window in {window.nvars} variables used with a measure in {mu.nvars}'
        )
    found, layer = [], [root for root in window.roots if mu.mass(root) > 0]
    while layer:
        found.extend(layer)
        if layer[0].level <= window.min_level:
            break
        layer = [child for cube in layer for child in cube.children() if mu.mass(child) > 0]
    return sorted(found, key=DyadicCube.sort_key)


def validate_assignment(assignment: FamilyAssignment, window: GridWindow) -> AssignmentReport:
    """Lists every window cube with 1 missing from U_Q or with U_P(Q) not inside U_Q.

    Cubes without mass are checked too.
    """
    one = assignment.one()
    report = AssignmentReport()
    for cube in window.cubes():
        report.checked += 1
        family = assignment.family(cube)
        if one not in family:
            report.violations.append(AssignmentViolation(cube, ViolationReason.MISSING_ONE))
        if cube.level < window.max_level and not assignment.family(cube.parent()).issubset(family):
            report.violations.append(AssignmentViolation(cube, ViolationReason.NOT_NESTED))
    report.ok = not report.violations
    return report


def _cube_spaces(mu: Measure, cube: DyadicCube, family: FunctionFamily, small: FunctionFamily,
                 large: FunctionFamily, kind: str, with_wavelet: bool) -> Tuple[Optional[OrthoBasis], OrthoBasis]:
    """Wavelet basis (if any) and complement or top basis of one cube.

    Roots pass small = empty and large = U_T.
    """
    wavelet = alpert_space_basis(mu, cube, family, family, BasisKind.WAVELET) if with_wavelet else None
    return wavelet, complement_basis(mu, cube, small, large, kind)


def build(mu: Measure, window: GridWindow, assignment: FamilyAssignment, workers: int = 1) -> BasisBundle:
    """Variable Alpert basis of the window.

    Wavelets live on charged cubes above min_level, complements on charged
    non-root cubes, tops on charged roots. Cubes without mass get no bases,
    but the assignment is validated on every cube of the window.
    """
    cubes = charged_cubes(mu, window)
    report = validate_assignment(assignment, window)
    if not report.ok:
        first = report.violations[0]
        logger.error(f"Assignment rejected with {len(report.violations)} violations")
        raise InvalidAssignmentException(
            f'Family assignment violates its hypotheses at {first.cube.to_dict()} ({first.reason})'
        )

    bundle = BasisBundle(measure=mu, window=window, assignment=assignment)
    empty = FunctionFamily(mu.nvars)
    tasks = []
    for cube in cubes:
        family = bundle.families[cube] = assignment.family(cube)
        with_wavelet = cube.level > window.min_level
        if cube.level == window.max_level:
            top = bundle.top_families[cube] = assignment.top_family(window, cube)
            tasks.append((mu, cube, family, empty, top, BasisKind.TOP, with_wavelet))
        else:
            parent_family = assignment.family(cube.parent())
            tasks.append((mu, cube, family, parent_family, family, BasisKind.COMPLEMENT, with_wavelet))

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_cube_spaces, *task) for task in tasks]
            results = [future.result() for future in futures]
    else:
        results = [_cube_spaces(*task) for task in tasks]

    for task, (wavelet, complement) in zip(tasks, results):
        cube, kind = task[1], task[5]
        if kind == BasisKind.TOP:
            bundle.tops[cube] = complement
        else:
            bundle.complements[cube] = complement
        if wavelet is not None:
            bundle.wavelets[cube] = wavelet
        logger.debug(f"Cube {cube.to_dict()}: {kind} {complement.dimension}, "
                     f"wavelet {wavelet.dimension if wavelet else 0}")

    logger.debug(f"Built bundle of size {bundle.size} over {len(cubes)} charged cubes")
    return bundle


def _check_support(bundle: BasisBundle, f: PiecewisePoly) -> None:
    window = bundle.window
    for cube in f.cubes():
        if cube.level > window.max_level or window.root_of(cube) is None:
            logger.error(f"Function piece on {cube.to_dict()} leaves the window")
            raise CubeOutsideWindowException(f'Function piece on {cube.to_dict()} lies outside the grid window')


def expand(bundle: BasisBundle, f: PiecewisePoly) -> List[float]:
    """Coefficients <f, b_i> for every bundle function b_i, in coefficient order."""
    _check_support(bundle, f)
    mu = bundle.measure
    coeffs = []
    for basis in bundle.bases():
        local = f.restrict(basis.cube)
        for exact, norm in zip(basis.exact, basis.norms):
            coeffs.append(float(mu.inner_product(basis.cube, local, exact)) / norm)
    return coeffs


def reconstruct(bundle: BasisBundle, coeffs: Sequence[float]) -> PiecewisePoly:
    """sum_i coeffs_i * b_i over the normalized bundle functions."""
    entries = [f for basis in bundle.bases() for f in basis.functions]
    if len(coeffs) != len(entries):
        raise InvalidArgumentException(
            f'Got {len(coeffs)} coefficients for a bundle of size {len(entries)}'
        )
    total = PiecewisePoly.zero(bundle.measure.nvars)
    for c, f in zip(coeffs, entries):
        if c:
            total = total + f.scale(float(c))
    return total


def norm_squared(bundle: BasisBundle, f: PiecewisePoly):
    """||f||^2 in L^2(mu) over the window roots."""
    mu = bundle.measure
    return sum((mu.norm_squared(root, f.restrict(root)) for root in bundle.window.roots), Fraction(0))


def random_resolvable(bundle: BasisBundle, rng: np.random.Generator, scale: int = 9) -> PiecewisePoly:
    """Random element of the resolvable space sum over charged min-level cubes of P_{Q,U_Q}.

    Coefficients are small integers, so the function is exact.
    """
    pieces: Dict[DyadicCube, Polynomial] = {}
    nvars = bundle.measure.nvars
    for cube, family in bundle.families.items():
        if cube.level != bundle.window.min_level:
            continue
        poly = Polynomial.zero(nvars)
        for member in family:
            poly = poly + member.scale(int(rng.integers(-scale, scale + 1)))
        pieces[cube] = poly
    return PiecewisePoly(nvars, pieces, check=False)


def verify_complete(bundle: BasisBundle, trials: int, rng: np.random.Generator) -> CompletenessResult:
    """Max relative reconstruction residual and Parseval defect on random resolvable f.

    Zero draws (in L^2(mu)) are redrawn. Residuals are reported, never raised.
    """
    result = CompletenessResult(trials=trials)
    if bundle.size == 0:
        return result
    done = 0
    while done < trials:
        f = random_resolvable(bundle, rng)
        f_norm_squared = float(norm_squared(bundle, f))
        if f_norm_squared == 0:
            continue
        coeffs = expand(bundle, f)
        residual = f - reconstruct(bundle, coeffs)
        relative = math.sqrt(abs(float(norm_squared(bundle, residual))) / f_norm_squared)
        parseval = abs(f_norm_squared - float(np.dot(coeffs, coeffs))) / f_norm_squared
        result.max_residual = max(result.max_residual, relative)
        result.max_parseval_defect = max(result.max_parseval_defect, parseval)
        done += 1
    logger.debug(f"Completeness over {trials} trials: residual {result.max_residual:.3e}, "
                 f"Parseval defect {result.max_parseval_defect:.3e}")
    return result


def random_partition(cube: DyadicCube, depth: int, rng: np.random.Generator) -> List[DyadicCube]:
    """Random dyadic partition of the cube into pieces 1 to `depth` levels below it.

    One randomly chosen branch always reaches the full depth; other
    branches stop splitting with probability 1/2 per level.
    """
    if depth < 1:
        raise InvalidArgumentException(f'Partition depth must be at least 1, got {depth}')
    pieces = []
    stack = [(cube, 0, True)]
    while stack:
        piece, below, forced = stack.pop()
        if below == 0 or (below < depth and (forced or rng.integers(2))):
            children = piece.children()
            chosen = int(rng.integers(len(children))) if forced else -1
            stack.extend((child, below + 1, i == chosen) for i, child in enumerate(children))
        else:
            pieces.append(piece)
    return sorted(pieces, key=DyadicCube.sort_key)


def random_piecewise(cube: DyadicCube, degree: int, rng: np.random.Generator, depth: int = 1,
                     scale: int = 9) -> PiecewisePoly:
    """Independent random polynomials of degree < degree on a random partition of the cube."""
    from ..models.polynomial import f_n_k

    monomials = f_n_k(cube.nvars, degree)
    pieces = {}
    for piece in random_partition(cube, depth, rng):
        terms = {m: Fraction(int(rng.integers(-scale, scale + 1))) for m in monomials}
        pieces[piece] = Polynomial(cube.nvars, terms)
    return PiecewisePoly(cube.nvars, pieces, check=False)


def verify_telescoping(bundle: BasisBundle, inner: DyadicCube, outer: DyadicCube, trials: int,
                       rng: np.random.Generator) -> TelescopingResult:
    """Max L^2(mu) norm of 1_Q sum_{Q < P <= R} Delta_P f - (E_Q f - 1_Q E_R f) on random f.

    Both sides are computed exactly. Requires Q strictly inside R and U_Q = U_R.
    """
    window, mu = bundle.window, bundle.measure
    for cube in (inner, outer):
        if not window.contains(cube):
            raise CubeOutsideWindowException(f'Cube {cube.to_dict()} lies outside the grid window')
    if not outer.strictly_contains(inner):
        raise InvalidArgumentException(f'{inner.to_dict()} is not strictly inside {outer.to_dict()}')

    family_inner = bundle.assignment.family(inner)
    family_outer = bundle.assignment.family(outer)
    if family_inner.as_set() != family_outer.as_set():
        raise HypothesisViolatedException(
            f'U differs between {inner.to_dict()} and {outer.to_dict()}; hypothesis violated, '
            f'only the weaker chained identity applies'
        )

    result = TelescopingResult(inner=inner, outer=outer, trials=trials)
    if mu.mass(inner) == 0:
        return result

    chain = [cube for cube in window.tower(inner) if cube.level <= outer.level][1:]
    component_inner = component_space_basis(mu, inner, family_inner)
    component_outer = component_space_basis(mu, outer, family_outer)
    degree = max(member.degree for member in family_outer) + 2
    # pieces may reach the finest level of the window
    depth = outer.level - window.min_level

    for _ in range(trials):
        f = random_piecewise(outer, degree, rng, depth=depth)
        lhs = PiecewisePoly.zero(mu.nvars)
        for cube in chain:
            if cube in bundle.wavelets:
                lhs = lhs + project(mu, cube, bundle.wavelets[cube], f).restrict(inner)
        rhs = project(mu, inner, component_inner, f) - project(mu, outer, component_outer, f).restrict(inner)
        difference = lhs - rhs
        result.max_discrepancy = max(result.max_discrepancy,
                                     math.sqrt(float(mu.inner_product(inner, difference, difference))))
    logger.debug(f"Telescoping {inner.to_dict()} -> {outer.to_dict()}: {result.max_discrepancy:.3e}")
    return result


def telescoping_pairs(bundle: BasisBundle) -> List[Tuple[DyadicCube, DyadicCube]]:
    """All charged (Q, R) with Q strictly inside R and U_Q = U_R, as sets."""
    pairs = []
    for inner in bundle.families:
        family = bundle.families[inner].as_set()
        for outer in bundle.window.tower(inner)[1:]:
            if bundle.assignment.family(outer).as_set() == family:
                pairs.append((inner, outer))
    return sorted(pairs, key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))


def verify_orthogonality(bundle: BasisBundle) -> OrthogonalityResult:
    """Orthogonality of wavelets to the families of their towers, and of the bundle itself.

    Floating checks use the normalized functions; exact checks use the
    pre-normalized representatives of distinct functions on nested cubes.
    """
    mu, window = bundle.measure, bundle.window
    result = OrthogonalityResult()

    for cube, basis in bundle.wavelets.items():
        families = [bundle.assignment.family(r) for r in window.tower(cube)]
        for b in basis.functions:
            for family in families:
                for p in family:
                    value = abs(float(mu.inner_product(cube, b, p)))
                    result.max_wavelet_violation = max(result.max_wavelet_violation, value)

    entries = [(basis.cube, exact, normalized)
               for basis in bundle.bases()
               for exact, normalized in zip(basis.exact, basis.functions)]
    for i, (cube_i, exact_i, normal_i) in enumerate(entries):
        for j in range(i, len(entries)):
            cube_j, exact_j, normal_j = entries[j]
            overlap = cube_i.intersection(cube_j)
            if overlap is None:
                continue
            # the coarser cube carries the inner product
            outer = cube_i if cube_i.level >= cube_j.level else cube_j
            result.pairs += 1
            value = float(mu.inner_product(outer, normal_i, normal_j))
            target = 1.0 if i == j else 0.0
            result.max_violation = max(result.max_violation, abs(value - target))
            if i != j and mu.inner_product(outer, exact_i, exact_j) != 0:
                result.exact_failures += 1
    logger.debug(f"Orthogonality over {result.pairs} pairs: {result.max_violation:.3e}, "
                 f"wavelet {result.max_wavelet_violation:.3e}, exact failures {result.exact_failures}")
    return result
