"""Deterministic rendering of reports for the command-line layer."""

import dataclasses
import json
import math

import numpy as np

from config.settings import FLOAT_DIGITS


def round_trip(value: float) -> float:
    """Render a float at FLOAT_DIGITS significant digits and parse it back."""
    return float(f"{value:.{FLOAT_DIGITS}g}")


def to_jsonable(obj):
    """Convert numpy values, dataclasses and tuples into JSON-ready builtins.

    Non-finite floats become None; dict keys become strings.
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return round_trip(value) if math.isfinite(value) else None
    return obj


def dumps_report(obj) -> str:
    """Serialize a report as sorted, indented JSON with a trailing newline.

    Python renders floats with the shortest repr that parses back to the
    same double, which never needs more than FLOAT_DIGITS digits.
    """
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"
