import math
from fractions import Fraction

import numpy as np
import pytest

from alpert_bases import AlpertApi
from alpert_bases.errors import (
    CubeOutsideWindowException,
    HypothesisViolatedException,
    InvalidArgumentException,
    InvalidAssignmentException,
)
from alpert_bases.helpers import bundle as bundle_helpers
from alpert_bases.helpers.spaces import component_dimension
from alpert_bases.models import (
    BasisKind,
    DyadicCube,
    FamilyAssignment,
    FamilyOverride,
    GridWindow,
    Measure,
    PiecewisePoly,
    Polynomial,
    Tolerance,
    ViolationReason,
)
from alpert_bases.tools import random_atomic_measure


@pytest.fixture
def api():
    return AlpertApi(seed=3)


@pytest.fixture
def mixed_assignment():
    """{1} on the root, {1, x1} strictly below it."""
    return FamilyAssignment(
        nvars=1,
        default_members=['1'],
        overrides=[FamilyOverride(below_level=0, members=['1', 'x1'])],
    )


def test_haar_bundle(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    counts = bundle.counts()
    assert (counts.tops, counts.complements, counts.wavelets, counts.total) == (1, 0, 3, 4)
    assert counts.cubes == 7
    assert set(bundle.wavelets) == {DyadicCube(0, (0,)), DyadicCube(-1, (0,)), DyadicCube(-1, (1,))}
    assert all(b.dimension == 0 for b in bundle.complements.values())
    top = bundle.tops[DyadicCube(0, (0,))]
    assert top.functions[0].evaluate((Fraction(1, 3),)) == pytest.approx(1.0)


def test_coefficient_order(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    layout = [(basis.kind, basis.cube) for basis in bundle.bases()]
    assert layout == [
        (BasisKind.TOP, DyadicCube(0, (0,))),
        (BasisKind.WAVELET, DyadicCube(0, (0,))),
        (BasisKind.COMPLEMENT, DyadicCube(-1, (0,))),
        (BasisKind.WAVELET, DyadicCube(-1, (0,))),
        (BasisKind.COMPLEMENT, DyadicCube(-1, (1,))),
        (BasisKind.WAVELET, DyadicCube(-1, (1,))),
    ]


def test_mixed_assignment_grows_complements(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    complements = {cube: basis.dimension for cube, basis in bundle.complements.items()}
    for cube, dimension in complements.items():
        assert dimension == (1 if cube.level == -1 else 0)
    assert bundle.top_families[DyadicCube(0, (0,))].to_texts() == ['1']
    # piecewise linear functions on the four quarters
    assert bundle.size == 8


def test_wavelet_dimension_formula(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    for cube, basis in bundle.wavelets.items():
        U = bundle.families[cube]
        ambient = sum(component_dimension(lebesgue, child, U) for child in cube.children())
        assert basis.dimension == ambient - component_dimension(lebesgue, cube, U)


def test_atomic_bundle_size_is_the_number_of_atoms(api):
    rng = np.random.default_rng(17)
    root = DyadicCube(0, (0, 0))
    mu = random_atomic_measure(rng, root, 12, resolution=3)
    window = GridWindow(-3, 0, [root])
    bundle = api.basis.build(mu, window, FamilyAssignment(nvars=2, default_degree=2))
    assert bundle.size == len(mu.atoms)
    result = api.basis.verify_complete(bundle, trials=5)
    assert result.max_residual <= Tolerance.COMPLETENESS
    assert result.max_parseval_defect <= Tolerance.PARSEVAL


def test_empty_cubes_contribute_nothing(api):
    mu = Measure.atomic([(Fraction(1, 8),), (Fraction(5, 8),)])
    window = GridWindow(-2, 0, [DyadicCube(0, (0,)), DyadicCube(0, (1,))])
    bundle = api.basis.build(mu, window, FamilyAssignment(nvars=1, default_degree=2))
    assert DyadicCube(0, (1,)) not in bundle.families
    assert all(mu.mass(cube) > 0 for cube in bundle.families)
    assert bundle.size == 2


def test_expand_a_constant(api):
    mu = Measure.atomic([(Fraction(i, 8),) for i in range(5)], [1, 2, 1, 3, 1])
    window = GridWindow(-3, 0, [DyadicCube(0, (0,))])
    bundle = api.basis.build(mu, window, FamilyAssignment(nvars=1, default_degree=2))
    one = PiecewisePoly.on_cube(DyadicCube(0, (0,)), Polynomial.constant(1))
    coeffs = api.basis.expand(bundle, one)
    assert coeffs[0] == pytest.approx(math.sqrt(8))
    assert max(abs(c) for c in coeffs[1:]) <= 1e-10


def test_expand_a_bundle_function(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    entries = bundle.entries()
    for j in (0, 3, len(entries) - 1):
        basis, i = entries[j]
        coeffs = api.basis.expand(bundle, basis.functions[i])
        expected = [1.0 if n == j else 0.0 for n in range(len(entries))]
        assert np.allclose(coeffs, expected, atol=1e-10)


def test_expand_zero(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    assert api.basis.expand(bundle, PiecewisePoly.zero(1)) == [0.0] * bundle.size


def test_expand_outside_the_window(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    outside = PiecewisePoly.on_cube(DyadicCube(0, (1,)), Polynomial.constant(1))
    with pytest.raises(CubeOutsideWindowException):
        api.basis.expand(bundle, outside)


def test_reconstruct_length_mismatch(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    with pytest.raises(InvalidArgumentException):
        api.basis.reconstruct(bundle, [1.0, 2.0])


def test_reconstruct_a_quarter(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    quarter = PiecewisePoly.on_cube(DyadicCube(-2, (2,)), Polynomial.constant(1))
    back = api.basis.reconstruct(bundle, api.basis.expand(bundle, quarter))
    for x, expected in ((Fraction(1, 8), 0.0), (Fraction(5, 8), 1.0), (Fraction(7, 8), 0.0)):
        assert float(back.evaluate((x,))) == pytest.approx(expected, abs=1e-12)


def test_finer_functions_leave_a_residual(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    x = PiecewisePoly.on_cube(DyadicCube(0, (0,)), Polynomial.variable(1, 0))
    residual = x - api.basis.reconstruct(bundle, api.basis.expand(bundle, x))
    assert float(bundle_helpers.norm_squared(bundle, residual)) > 1e-4


def test_full_verification(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    report = api.basis.verify(bundle, trials=4)
    assert report.passed
    assert report.orthogonality.exact_failures == 0
    assert report.orthogonality.max_wavelet_violation <= Tolerance.ORTHOGONALITY
    pairs = {(t.inner, t.outer) for t in report.telescoping}
    assert (DyadicCube(-2, (0,)), DyadicCube(-1, (0,))) in pairs
    assert all(t.inner.level == -2 for t in report.telescoping)


def test_haar_telescoping_over_two_levels(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    result = api.basis.verify_telescoping(bundle, DyadicCube(-2, (1,)), DyadicCube(0, (0,)), trials=3)
    assert result.max_discrepancy <= Tolerance.TELESCOPING


def test_random_partition_reaches_the_finest_level():
    cube = DyadicCube(0, (0, 0))
    rng = np.random.default_rng(11)
    for depth in (1, 2, 3):
        pieces = bundle_helpers.random_partition(cube, depth, rng)
        assert sum(piece.volume for piece in pieces) == cube.volume
        assert all(cube.contains(piece) and -depth <= piece.level <= -1 for piece in pieces)
        assert min(piece.level for piece in pieces) == -depth
        for i, piece in enumerate(pieces):
            assert all(piece.intersection(other) is None for other in pieces[i + 1:])
    with pytest.raises(InvalidArgumentException):
        bundle_helpers.random_partition(cube, 0, rng)


def test_telescoping_needs_equal_families(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    with pytest.raises(HypothesisViolatedException):
        api.basis.verify_telescoping(bundle, DyadicCube(-1, (0,)), DyadicCube(0, (0,)), trials=1)


def test_wavelets_vanish_against_tower_families(api, lebesgue, haar_window, mixed_assignment):
    bundle = api.basis.build(lebesgue, haar_window, mixed_assignment)
    mu = lebesgue
    for cube, basis in bundle.wavelets.items():
        for r in haar_window.tower(cube):
            for p in bundle.assignment.family(r):
                for b in basis.exact:
                    assert mu.inner_product(cube, b, p) == 0


def test_validate_assignment():
    window = GridWindow(-2, 0, [DyadicCube(0, (0,))])
    assert bundle_helpers.validate_assignment(FamilyAssignment.constant(1, ['1']), window).ok

    growing = FamilyAssignment(nvars=1, default_members=['1'],
                               overrides=[FamilyOverride(below_level=0, members=['1', 'x1'])])
    assert bundle_helpers.validate_assignment(growing, window).ok

    shrinking = FamilyAssignment(nvars=1, default_members=['1', 'x1'],
                                 overrides=[FamilyOverride(below_level=0, members=['1'])])
    report = bundle_helpers.validate_assignment(shrinking, window)
    assert not report.ok
    assert {v.cube for v in report.violations} == {DyadicCube(-1, (0,)), DyadicCube(-1, (1,))}
    assert all(v.reason == ViolationReason.NOT_NESTED for v in report.violations)

    missing = FamilyAssignment.constant(1, ['x1'])
    reasons = {v.reason for v in bundle_helpers.validate_assignment(missing, window).violations}
    assert reasons == {ViolationReason.MISSING_ONE}


def test_build_rejects_invalid_assignments(api, lebesgue, haar_window):
    shrinking = FamilyAssignment(nvars=1, default_members=['1', 'x1'],
                                 overrides=[FamilyOverride(below_level=0, members=['1'])])
    with pytest.raises(InvalidAssignmentException):
        api.basis.build(lebesgue, haar_window, shrinking)


def test_build_rejects_violations_on_empty_cubes(api, haar_window):
    left_half = Measure.uniform([DyadicCube(-1, (0,))])
    shrinking = FamilyAssignment(nvars=1, default_members=['1', 'x1'],
                                 overrides=[FamilyOverride(subtree=DyadicCube(-1, (1,)), members=['1'])])
    report = api.basis.validate_assignment(shrinking, haar_window)
    assert [v.cube for v in report.violations] == [DyadicCube(-1, (1,))]
    assert left_half.mass(DyadicCube(-1, (1,))) == 0
    with pytest.raises(InvalidAssignmentException):
        api.basis.build(left_half, haar_window, shrinking)


def test_subtree_override(api, lebesgue, haar_window):
    assignment = FamilyAssignment(nvars=1, default_degree=1,
                                  overrides=[FamilyOverride(subtree=DyadicCube(-1, (1,)), degree=2)])
    bundle = api.basis.build(lebesgue, haar_window, assignment)
    assert bundle.complements[DyadicCube(-1, (1,))].dimension == 1
    assert bundle.complements[DyadicCube(-1, (0,))].dimension == 0
    assert bundle.top_families[DyadicCube(0, (0,))].to_texts() == ['1']
    # two quarters with constants, two with linear functions
    assert bundle.size == 2 + 4
    assert api.basis.verify(bundle, trials=3).passed


def test_constant_assignment_degenerates(api, lebesgue, haar_window):
    bundle = api.basis.build(lebesgue, haar_window, FamilyAssignment(nvars=1, default_degree=2))
    assert bundle.counts().complements == 0
    for cube, basis in bundle.wavelets.items():
        U = bundle.families[cube]
        assert basis.dimension == 2 * component_dimension(lebesgue, cube.children()[0], U) - 2
    assert bundle.tops[DyadicCube(0, (0,))].dimension == 2


def test_parallel_build_matches_serial(lebesgue, haar_window, mixed_assignment):
    serial = AlpertApi(workers=1).basis.build(lebesgue, haar_window, mixed_assignment)
    parallel = AlpertApi(workers=2).basis.build(lebesgue, haar_window, mixed_assignment)
    assert parallel.to_dict() == serial.to_dict()


def test_bundle_records(api, lebesgue, haar_window, haar_assignment):
    bundle = api.basis.build(lebesgue, haar_window, haar_assignment)
    records = bundle.to_dict()['functions']
    assert len(records) == 4
    assert records[0]['kind'] == 'top'
    assert records[0]['exact_pre_normalized'] == [{'cube': {'level': 0, 'coords': [0]}, 'poly': '1'}]
    assert records[0]['norm'] == pytest.approx(1.0)
