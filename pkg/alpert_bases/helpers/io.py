"""JSON input and output for measures, configurations and reports."""

import hashlib
import json
import os
from typing import Any, Dict

from ..errors import AlpertException, InputFileException, InvalidArgumentException
from ..logging_config import get_logger
from ..models.dyadic import DyadicCube
from ..models.measure import Measure
from ..models.reports import RunConfig

logger = get_logger("io")


def load_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as error:
        logger.error(f"Cannot read {path}: {error}")
        raise InputFileException(f'Cannot read {path}: {error}') from error
    except json.JSONDecodeError as error:
        logger.error(f"Invalid JSON in {path}: {error}")
        raise InputFileException(f'Invalid JSON in {path}: {error}') from error


def load_measure(path: str) -> Measure:
    data = load_json(path)
    if not isinstance(data, dict):
        raise InputFileException(f'{path} does not hold a measure object')
    try:
        return Measure.from_dict(data)
    except AlpertException:
        raise
    except (TypeError, ValueError) as error:
        raise InputFileException(f'Malformed measure in {path}: {error}') from error


def load_config(path: str) -> RunConfig:
    """RunConfig with its measure path resolved against the config's directory."""
    data = load_json(path)
    if not isinstance(data, dict):
        raise InputFileException(f'{path} does not hold a configuration object')
    try:
        config = RunConfig.from_dict(data)
    except AlpertException:
        raise
    except (TypeError, ValueError) as error:
        raise InputFileException(f'Malformed configuration in {path}: {error}') from error
    if not config.measure:
        raise InputFileException(f'{path} names no measure file')
    if not os.path.isabs(config.measure):
        config.measure = os.path.join(os.path.dirname(os.path.abspath(path)), config.measure)
    return config


def parse_cube(text: str) -> DyadicCube:
    """Parse "LEVEL:C1,C2,..." such as "0:-1" or "-2:1,3", or the JSON literal {"level", "coords"}."""
    if text.lstrip().startswith('{'):
        return _parse_cube_json(text)
    try:
        level, coords = text.split(':')
        return DyadicCube(int(level), tuple(int(c) for c in coords.split(',')))
    except ValueError as error:
        raise InvalidArgumentException(f'Invalid cube {text!r}; expected LEVEL:C1,C2,...') from error


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_cube_json(text: str) -> DyadicCube:
    try:
        data = json.loads(text)
        level, coords = data['level'], data['coords']
        if not isinstance(coords, list) or not coords or not all(map(_is_int, [level, *coords])):
            raise ValueError(text)
        return DyadicCube(level, tuple(coords))
    except (ValueError, TypeError, KeyError) as error:
        raise InvalidArgumentException(f'Invalid cube {text!r}; expected {{"level": m, "coords": [...]}}') from error


def file_sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, 'rb') as handle:
        for block in iter(lambda: handle.read(65536), b''):
            digest.update(block)
    return digest.hexdigest()


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def write_json(path: str, data: Any) -> None:
    try:
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(dumps(data))
    except OSError as error:
        logger.error(f"Cannot write {path}: {error}")
        raise InputFileException(f'Cannot write {path}: {error}') from error
