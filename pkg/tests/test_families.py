import pytest

from alpert_bases.errors import InvalidArgumentException
from alpert_bases.models import (
    DyadicCube,
    FamilyAssignment,
    FamilyOverride,
    FunctionFamily,
    GridWindow,
    Polynomial,
    RunConfig,
)


def test_last_applying_override_wins():
    assignment = FamilyAssignment(nvars=1, default_degree=1, overrides=[
        FamilyOverride(below_level=0, degree=2),
        FamilyOverride(below_level=-1, degree=3),
    ])
    assert len(assignment.family(DyadicCube(0, (0,)))) == 1
    assert len(assignment.family(DyadicCube(-1, (0,)))) == 2
    assert len(assignment.family(DyadicCube(-2, (3,)))) == 3


def test_both_selectors_must_hold():
    override = FamilyOverride(below_level=-1, subtree=DyadicCube(0, (1,)), degree=2)
    assert override.applies(DyadicCube(-2, (4,)))
    assert not override.applies(DyadicCube(-1, (2,)))
    assert not override.applies(DyadicCube(-2, (0,)))


def test_override_validation():
    with pytest.raises(InvalidArgumentException):
        FamilyOverride(degree=2)
    with pytest.raises(InvalidArgumentException):
        FamilyOverride(below_level=0)
    with pytest.raises(InvalidArgumentException):
        FamilyOverride(below_level=0, degree=2, members=['1'])


def test_top_family_sees_deep_subtrees():
    window = GridWindow(-3, 0, [DyadicCube(0, (0,))])
    assignment = FamilyAssignment(nvars=1, default_members=['1', 'x1'], overrides=[
        FamilyOverride(subtree=DyadicCube(-2, (3,)), members=['1', 'x1', 'x1^2']),
    ])
    families = assignment.families_below(window, DyadicCube(0, (0,)))
    assert len(families) == 2
    assert assignment.top_family(window, DyadicCube(0, (0,))).to_texts() == ['1', 'x1']


def test_explicit_members_keep_their_order():
    assignment = FamilyAssignment.constant(2, ['x2', '1', 'x1'])
    assert assignment.family(DyadicCube(0, (0, 0))).members == [
        Polynomial.parse(t, 2) for t in ('x2', '1', 'x1')
    ]
    assert assignment.one() in assignment.family(DyadicCube(0, (0, 0)))


def test_family_intersection_keeps_order():
    U = FunctionFamily.from_texts(1, ['x1', '1', 'x1^2'])
    V = FunctionFamily.from_texts(1, ['1', 'x1'])
    assert U.intersection(V).to_texts() == ['x1', '1']
    assert V.issubset(U)
    assert not U.issubset(V)


def test_run_config_families():
    config = RunConfig.from_dict({
        'measure': 'mu.json',
        'window': {'min_level': -2, 'max_level': 0, 'roots': [{'level': 0, 'coords': [0]}]},
        'order': 'grlex',
        'families': {
            'default_degree': 1,
            'overrides': [{'below_level': 0, 'degree': 2}, {'subtree': {'level': -1, 'coords': [1]}, 'degree': 3}],
        },
    })
    assert config.window.roots == [DyadicCube(0, (0,))]
    assignment = config.assignment(nvars=1)
    assert assignment.order == 'grlex'
    assert assignment.overrides[1].subtree == DyadicCube(-1, (1,))
    assert len(assignment.family(DyadicCube(-2, (3,)))) == 3
    assert len(assignment.family(DyadicCube(-2, (0,)))) == 2
