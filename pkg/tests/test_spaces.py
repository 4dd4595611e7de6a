from fractions import Fraction

import numpy as np
import pytest
import sympy

from alpert_bases import AlpertApi
from alpert_bases.errors import CubeOutsideWindowException
from alpert_bases.helpers import spaces
from alpert_bases.models import DyadicCube, FunctionFamily, PiecewisePoly, Polynomial
from alpert_bases.tools import random_atomic_measure, random_family


def family(*texts, nvars=1):
    return FunctionFamily.from_texts(nvars, list(texts))


def test_gram_matrix_on_centered_interval(lebesgue_two, centered_interval):
    functions = spaces.restrictions(centered_interval, family('1', 'x1 - 1').members)
    gram = spaces.gram_matrix(lebesgue_two, centered_interval, functions)
    assert gram == [[2, 0], [0, Fraction(2, 3)]]


def test_gram_matrix_rejects_outside_pieces(lebesgue_two):
    f = PiecewisePoly.on_cube(DyadicCube(0, (1,)), Polynomial.constant(1))
    with pytest.raises(CubeOutsideWindowException):
        spaces.gram_matrix(lebesgue_two, DyadicCube(0, (0,)), [f])


def test_component_dimension_of_collinear_atoms(collinear_atoms):
    cube = DyadicCube(0, (0, 0))
    U = FunctionFamily.of_degree(2, 3)
    assert len(U) == 6
    assert spaces.component_dimension(collinear_atoms, cube, U) == 3


def test_component_basis_is_greedy(collinear_atoms):
    cube = DyadicCube(0, (0, 0))
    U = family('1', 'x1', 'x2', 'x1^2', 'x1*x2', nvars=2)
    assert spaces.component_basis(collinear_atoms, cube, U) == [
        Polynomial.parse(t, 2) for t in ('1', 'x1', 'x1^2')
    ]


def test_component_dimension_on_boxes(lebesgue):
    for k in range(1, 5):
        assert spaces.component_dimension(lebesgue, DyadicCube(0, (0,)), FunctionFamily.of_degree(1, k)) == k


def test_empty_cube_has_nothing(collinear_atoms):
    cube = DyadicCube(0, (1, 0))
    U = FunctionFamily.of_degree(2, 3)
    assert spaces.component_dimension(collinear_atoms, cube, U) == 0
    assert spaces.alpert_space_basis(collinear_atoms, cube, U, U).dimension == 0


def test_haar_space(lebesgue_two, centered_interval):
    U = family('1')
    basis = spaces.alpert_space_basis(lebesgue_two, centered_interval, U, U)
    assert basis.dimension == 1
    haar = basis.exact[0]
    values = [haar.evaluate((Fraction(1, 2),)), haar.evaluate((Fraction(3, 2),))]
    assert values[0] == -values[1] != 0


def test_odd_condition_kills_the_haar_space(lebesgue_two, centered_interval):
    basis = spaces.alpert_space_basis(lebesgue_two, centered_interval, family('1'), family('1', 'x1 - 1'))
    assert basis.dimension == 0


def test_even_condition_is_free(lebesgue_two, centered_interval):
    U = family('1')
    plain = spaces.alpert_space_basis(lebesgue_two, centered_interval, U, U)
    even = spaces.alpert_space_basis(lebesgue_two, centered_interval, U, family('1', '(x1 - 1)^2'))
    assert even.dimension == 1
    ratio = even.exact[0].evaluate((Fraction(1, 2),)) / plain.exact[0].evaluate((Fraction(1, 2),))
    assert even.exact[0].same_function(plain.exact[0].scale(ratio))

    report = spaces.dimension_report(lebesgue_two, centered_interval, U, family('1', '(x1 - 1)^2'))
    assert (report.ambient, report.actual, report.freebies) == (2, 1, 1)
    assert report.drops == [1, 0]


def test_alpert_basis_is_orthogonal_to_v(lebesgue):
    cube = DyadicCube(0, (0,))
    U = FunctionFamily.of_degree(1, 3)
    basis = spaces.alpert_space_basis(lebesgue, cube, U, U)
    assert basis.dimension == 3
    assert basis.is_orthogonal()
    for b in basis.exact:
        for v in U:
            assert lebesgue.inner_product(cube, b, v) == 0


def test_complement_basis(lebesgue):
    cube = DyadicCube(0, (0,))
    complement = spaces.complement_basis(lebesgue, cube, family('1'), family('1', 'x1'))
    assert complement.dimension == 1
    assert lebesgue.inner_product(cube, complement.exact[0], Polynomial.constant(1)) == 0
    top = spaces.complement_basis(lebesgue, cube, FunctionFamily(1), family('1', 'x1'))
    assert top.dimension == 2


def test_projections(lebesgue):
    cube = DyadicCube(0, (0,))
    U = family('1', 'x1')
    x = PiecewisePoly.on_cube(cube, Polynomial.variable(1, 0))
    assert spaces.component_projection(lebesgue, cube, U, x).same_function(x)
    square = PiecewisePoly.on_cube(cube, Polynomial.parse('x1^2', 1))
    residual = square - spaces.component_projection(lebesgue, cube, U, square)
    for p in U:
        assert lebesgue.inner_product(cube, residual, p) == 0
    # Haar part of x on [0, 1)
    delta = spaces.alpert_projection(lebesgue, cube, family('1'), family('1'), x)
    assert lebesgue.inner_product(cube, delta, Polynomial.constant(1)) == 0
    assert not delta.is_zero()


def test_dimension_rules_on_random_instances():
    rng = np.random.default_rng(31)
    for _ in range(40):
        nvars = int(rng.integers(1, 3))
        cube = DyadicCube(0, (0,) * nvars)
        mu = random_atomic_measure(rng, cube, int(rng.integers(1, 9)), resolution=3)
        U = random_family(rng, nvars, int(rng.integers(1, 5)))
        V = random_family(rng, nvars, int(rng.integers(1, 5)))
        report = spaces.dimension_report(mu, cube, U, V)
        assert set(report.drops) <= {0, 1}
        assert report.lower_bound <= report.actual <= report.upper_bound
        assert report.actual == report.ambient - sum(report.drops)

        W = FunctionFamily(nvars, U.members[:max(1, len(U) // 2)])
        nested = spaces.dimension_report(mu, cube, U, W)
        assert nested.v_subset_u
        assert nested.actual == nested.ambient - nested.component_v


def test_gram_rank_matches_sympy(collinear_atoms):
    cube = DyadicCube(0, (0, 0))
    U = FunctionFamily.of_degree(2, 4)
    gram = spaces.gram_matrix(collinear_atoms, cube, spaces.restrictions(cube, U.members))
    assert sympy.Matrix(gram).rank() == spaces.component_dimension(collinear_atoms, cube, U) == 4


def test_dims_table(collinear_atoms, lebesgue):
    api = AlpertApi()
    rows = api.spaces.dims_table(collinear_atoms, DyadicCube(0, (0, 0)), 3)
    assert [row.component_dim for row in rows] == [1, 2, 3]
    assert [row.staircase for row in rows] == [1, 2, 3]
    assert all(row.hilbert_dim == 0 for row in rows)
    # one atom per quadrant child except the two empty off-diagonal ones
    assert rows[-1].ambient == 2 * 2 + 0 + 0

    boxes = api.spaces.dims_table(lebesgue, DyadicCube(0, (0,)), 3)
    assert [row.component_dim for row in boxes] == [1, 2, 3]
    assert all(row.staircase is None and row.note for row in boxes)
    assert [row.alpert_dim for row in boxes] == [1, 2, 3]

    empty = api.spaces.dims_table(collinear_atoms, DyadicCube(0, (1, 1)), 2)
    assert all(row.component_dim == row.ambient == row.alpert_dim == 0 for row in empty)
