from fractions import Fraction

import numpy as np
import pytest

from alpert_bases.models import DyadicCube, FamilyAssignment, GridWindow, Measure


@pytest.fixture
def unit_interval():
    return DyadicCube(0, (0,))


@pytest.fixture
def lebesgue(unit_interval):
    """Lebesgue measure on [0, 1)."""
    return Measure.uniform([unit_interval])


@pytest.fixture
def centered_interval():
    """[0, 2): the dyadic stand-in for a symmetric interval, centered at 1."""
    return DyadicCube(1, (0,))


@pytest.fixture
def lebesgue_two(centered_interval):
    """Lebesgue measure on [0, 2), given as the two unit boxes."""
    return Measure.uniform([DyadicCube(0, (0,)), DyadicCube(0, (1,))])


@pytest.fixture
def collinear_atoms():
    """Four unit atoms on the diagonal of [0, 1)^2."""
    return Measure.atomic([(Fraction(i, 4), Fraction(i, 4)) for i in range(4)])


@pytest.fixture
def haar_window(unit_interval):
    return GridWindow(-2, 0, [unit_interval])


@pytest.fixture
def haar_assignment():
    return FamilyAssignment.constant(1, ['1'])


@pytest.fixture
def rng():
    return np.random.default_rng(2024)
