"""Serialization helpers for JSON output."""

import dataclasses
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any

from hv_algebra.elements import AlgebraElement, BasisSymbol
from hv_algebra.groups import GroupElement
from hv_algebra.scalars import Scalar


def element_data(u: AlgebraElement) -> dict[str, Any]:
    return {
        "algebra": u.tag.value,
        "text": str(u),
        "terms": [[str(sym), str(c)] for sym, c in u.terms.items()],
    }


def to_data(obj: Any) -> Any:
    if obj is None or isinstance(obj, (str, int, bool)):
        return obj
    if isinstance(obj, (Scalar, Fraction, GroupElement, BasisSymbol, Path)):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, AlgebraElement):
        return element_data(obj)
    if isinstance(obj, dict):
        return {str(to_data(k)): to_data(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [to_data(v) for v in obj]
    if hasattr(obj, "to_data") and callable(obj.to_data):
        return to_data(obj.to_data())
    if hasattr(obj, "model_dump") and callable(obj.model_dump):
        return to_data(obj.model_dump(exclude_none=True))
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_data({f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)})
    if hasattr(obj, "__dict__"):
        return to_data(vars(obj))
    return str(obj)
