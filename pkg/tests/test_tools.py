import logging
from io import StringIO

import numpy as np
import pytest

from alpert_bases import is_debug_mode, set_debug_mode
from alpert_bases.errors import InvalidArgumentException
from alpert_bases.helpers import io
from alpert_bases.helpers.rationals import to_rational
from alpert_bases.logging_config import get_logger
from alpert_bases.models import DimsRow, DyadicCube, RunReport
from alpert_bases.tools import model_schema, random_atomic_measure, random_points, report_schemas


def test_parse_cube():
    assert io.parse_cube('-2:1,3') == DyadicCube(-2, (1, 3))
    assert io.parse_cube('0:-1') == DyadicCube(0, (-1,))
    with pytest.raises(InvalidArgumentException):
        io.parse_cube('0:a')


def test_parse_cube_json_literal():
    assert io.parse_cube('{"level": -2, "coords": [1, 3]}') == DyadicCube(-2, (1, 3))
    assert io.parse_cube(' {"coords": [-1], "level": 0}') == DyadicCube(0, (-1,))
    for bad in ('{"level": 0}', '{"level": 0, "coords": []}', '{"level": 0, "coords": [0.5]}',
                '{"level": true, "coords": [0]}', '{"level": 0, "coords": 1}', '{level: 0}'):
        with pytest.raises(InvalidArgumentException):
            io.parse_cube(bad)


def test_rational_literals():
    assert to_rational('3/4') == to_rational(' 3/4 ')
    assert to_rational(2) == 2
    for bad in (0.5, True, '1/0', 'x'):
        with pytest.raises(InvalidArgumentException):
            to_rational(bad)


def test_model_schema():
    schema = model_schema(DimsRow)
    assert schema['properties']['k'] == {'type': 'integer'}
    assert schema['properties']['staircase'] == {'type': 'integer'}
    assert 'staircase is None' in schema['description']


def test_report_schemas_follow_references():
    definitions = report_schemas()['definitions']
    assert definitions['RunReport']['properties']['dimensions'] == {
        'type': 'array', 'items': {'$ref': '#/definitions/DimsRow'},
    }
    assert definitions['RunConfig']['properties']['window'] == {'$ref': '#/definitions/GridWindow'}
    assert 'DyadicCube' in definitions


def test_report_serializes_rows():
    report = RunReport(command='dims', dimensions=[DimsRow(k=2, family_size=3)])
    data = report.to_dict()
    assert data['dimensions'][0]['k'] == 2
    assert io.dumps(data).endswith('}\n')


def test_random_instances_are_reproducible():
    cube = DyadicCube(-1, (1, 0))
    first = random_points(np.random.default_rng(9), cube, 6)
    second = random_points(np.random.default_rng(9), cube, 6)
    assert first == second
    assert len(set(first)) == 6
    assert all(cube.contains_point(p) for p in first)
    mu = random_atomic_measure(np.random.default_rng(9), cube, 6, max_weight=2)
    assert all(1 <= atom.weight <= 2 for atom in mu.atoms)


def test_debug_mode_switch():
    logger = get_logger('tests')
    assert logger.name == 'alpert_bases.tests'
    assert get_logger('alpert_bases.groebner').name == 'alpert_bases.groebner'
    first, second = StringIO(), StringIO()
    try:
        set_debug_mode(True, stream=first)
        set_debug_mode(True, stream=second)
        assert is_debug_mode()
        assert get_logger().level == logging.DEBUG
        assert len([h for h in get_logger().handlers if isinstance(h, logging.StreamHandler)]) == 1
        logger.debug('staircase grew to 3')
        assert first.getvalue() == ''
        assert 'alpert_bases.tests DEBUG: staircase grew to 3' in second.getvalue()
    finally:
        set_debug_mode(False)
    assert not is_debug_mode()
    assert get_logger().level == logging.WARNING
    assert not any(isinstance(h, logging.StreamHandler) for h in get_logger().handlers)
