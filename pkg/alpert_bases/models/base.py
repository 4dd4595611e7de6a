from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any, Dict, Type, TypeVar, Union, get_args, get_origin

T = TypeVar("T", bound="BaseModel")


class BaseModel:
    """Base class for all dataclass models, with from_dict and to_dict methods.

    Subclasses are dataclasses (frozen or not). Rationals serialize as
    strings, nested models recurse, tuples and lists become JSON arrays.
    """

    @classmethod
    def from_dict(cls: Type[T], data: Dict[str, Any]) -> T:
        if not data or not isinstance(data, dict):
            return cls()  # Fallback to empty instance if data is not a dict

        model_fields = cls.__dataclass_fields__

        filtered_data = {}
        for k, v in data.items():
            if k in model_fields:
                filtered_data[k] = _coerce(model_fields[k].type, v)

        return cls(**filtered_data)

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: _plain(getattr(self, f.name)) for f in fields(self)}


def _coerce(field_type: Any, value: Any) -> Any:
    origin = get_origin(field_type)

    if field_type is Fraction:
        from ..helpers.rationals import to_rational
        return to_rational(value)

    if origin is Union:
        # Optional[T]
        non_none = [arg for arg in get_args(field_type) if arg is not type(None)]
        if value is None or len(non_none) != 1:
            return value
        return _coerce(non_none[0], value)

    if origin in (list, tuple) and isinstance(value, (list, tuple)):
        args = get_args(field_type)
        inner = args[0] if args else Any
        items = [_coerce(inner, item) for item in value]
        return tuple(items) if origin is tuple else items

    if isinstance(field_type, type) and issubclass(field_type, BaseModel):
        return field_type.from_dict(value) if isinstance(value, dict) else value

    return value


def _plain(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.to_dict()
    if isinstance(value, Fraction):
        from ..helpers.rationals import format_rational
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if is_dataclass(value):
        return {f.name: _plain(getattr(value, f.name)) for f in fields(value)}
    if hasattr(value, 'to_text'):
        return value.to_text()
    return value
