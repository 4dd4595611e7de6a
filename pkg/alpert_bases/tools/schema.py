"""JSON schemas of the report models."""

import inspect
from fractions import Fraction
from typing import Any, Dict, List, Type, Union, get_args, get_origin, get_type_hints

from ..models.base import BaseModel
from ..models.dyadic import DyadicCube, GridWindow
from ..models.families import AssignmentReport, FamilyAssignment
from ..models.measure import Measure
from ..models.reports import (
    CompletenessResult,
    DimsRow,
    OrthogonalityResult,
    RunConfig,
    RunReport,
    TelescopingResult,
    VerifyReport,
)
from ..models.spaces import DimensionReport

REPORT_MODELS = [
    RunReport,
    RunConfig,
    DimsRow,
    DimensionReport,
    VerifyReport,
    CompletenessResult,
    OrthogonalityResult,
    TelescopingResult,
    AssignmentReport,
    FamilyAssignment,
    GridWindow,
    DyadicCube,
    Measure,
]


def map_type(python_type: Any, definitions: Dict[str, Any]) -> Dict[str, Any]:
    origin = get_origin(python_type)
    args = get_args(python_type)

    if python_type is bool:
        return {"type": "boolean"}
    if python_type is int:
        return {"type": "integer"}
    if python_type is float:
        return {"type": "number"}
    if python_type is str:
        return {"type": "string"}
    if python_type is Fraction:
        return {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
    if origin in (list, List, tuple):
        inner = args[0] if args else Any
        return {"type": "array", "items": map_type(inner, definitions)}
    if origin in (dict, Dict):
        inner = args[1] if len(args) == 2 else Any
        return {"type": "object", "additionalProperties": map_type(inner, definitions)}
    if origin is Union:
        # Optional[T]
        non_none = [arg for arg in args if arg is not type(None)]
        if len(non_none) == 1:
            return map_type(non_none[0], definitions)
        return {"anyOf": [map_type(arg, definitions) for arg in non_none]}
    if inspect.isclass(python_type) and issubclass(python_type, BaseModel):
        model_schema(python_type, definitions)
        return {"$ref": f"#/definitions/{python_type.__name__}"}
    return {}


def model_schema(model_class: Type[BaseModel], definitions: Dict[str, Any] = None) -> Dict[str, Any]:
    """Object schema of a dataclass model; nested models land in definitions."""
    definitions = {} if definitions is None else definitions
    name = model_class.__name__
    if name in definitions:
        return definitions[name]

    schema = {
        "type": "object",
        "description": inspect.cleandoc(model_class.__doc__) if model_class.__doc__ else "",
        "properties": {},
    }
    definitions[name] = schema
    hints = get_type_hints(model_class)
    for field_name in model_class.__dataclass_fields__:
        schema["properties"][field_name] = map_type(hints[field_name], definitions)
    return schema


def report_schemas() -> Dict[str, Any]:
    definitions: Dict[str, Any] = {}
    for model in REPORT_MODELS:
        model_schema(model, definitions)
    return {"$schema": "http://json-schema.org/draft-07/schema#", "definitions": definitions}
