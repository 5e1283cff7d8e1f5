"""Reading and writing matroid spec files (JSON).

Supported shapes:
  {"type": "bases", "n": 5, "bases": ["345", "135", ...]}
  {"type": "uniform", "r": 2, "n": 4}
  {"type": "graphic", "vertices": 4, "edges": [[1, 2], ...]}
  {"type": "linear", "p": 7, "matrix": [[...], ...]}
  {"type": "dual", "of": <spec>}
"""

from __future__ import annotations

import json

from .bitsets import parse_subset, subset_str
from .errors import ParseError
from .matroid import Matroid, from_bases, graphic, linear_over_prime_field, uniform


def _require(spec: dict, field: str, types) -> object:
    if field not in spec:
        raise ParseError(f"missing field {field!r} for type {spec.get('type')!r}")
    value = spec[field]
    if not isinstance(value, types):
        raise ParseError(f"field {field!r} has wrong type {type(value).__name__}")
    return value


def matroid_from_dict(spec: dict) -> Matroid:
    if not isinstance(spec, dict):
        raise ParseError(f"matroid spec must be an object, got {type(spec).__name__}")
    kind = _require(spec, "type", str)
    if kind == "bases":
        n = _require(spec, "n", int)
        raw = _require(spec, "bases", list)
        try:
            masks = [parse_subset(s, n) for s in raw]
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad subset in field 'bases': {exc}") from exc
        return from_bases(n, masks)
    if kind == "uniform":
        return uniform(_require(spec, "r", int), _require(spec, "n", int))
    if kind == "graphic":
        vertices = _require(spec, "vertices", int)
        edges = _require(spec, "edges", list)
        try:
            pairs = [(int(u), int(v)) for u, v in edges]
        except (ValueError, TypeError) as exc:
            raise ParseError(f"bad edge in field 'edges': {exc}") from exc
        return graphic(vertices, pairs)
    if kind == "linear":
        return linear_over_prime_field(
            _require(spec, "p", int), _require(spec, "matrix", list)
        )
    if kind == "dual":
        return matroid_from_dict(_require(spec, "of", dict)).dual
    raise ParseError(f"unknown matroid type {kind!r}")


def parse_spec(text: str | bytes) -> Matroid:
    """Parse a JSON matroid spec; construction errors propagate unchanged."""
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return matroid_from_dict(spec)


def spec_dict(matroid: Matroid) -> dict:
    """An explicit-bases spec reproducing the matroid."""
    return {
        "type": "bases",
        "n": matroid.n,
        "bases": [subset_str(b, matroid.n) for b in matroid.bases],
    }
