"""Point literals and the JSON wire format for decompositions."""
from __future__ import annotations

import json
from fractions import Fraction

from .decomposition import Decomposition, Term
from .groups import GroupId, Point
from .scalar import ScalarParseError, parse_scalar

__all__ = ["parse_point", "format_point", "decomposition_to_json", "decomposition_from_json",
           "dumps", "loads", "SCALAR_SCHEMA", "POINT_SCHEMA", "DECOMPOSITION_SCHEMA"]


def parse_point(text: str) -> Point:
    """Parse ``"<scalar>,<scalar>"``; errors carry the offending position in ``text``."""
    if text.count(",") != 1:
        pos = text.find(",", text.find(",") + 1) if text.count(",") > 1 else len(text)
        raise ScalarParseError(text, pos, "expected exactly one ',' between coordinates")
    left, right = text.split(",")
    try:
        x = parse_scalar(left)
    except ScalarParseError as e:
        raise ScalarParseError(text, e.pos, e.reason) from None
    try:
        y = parse_scalar(right)
    except ScalarParseError as e:
        raise ScalarParseError(text, len(left) + 1 + e.pos, e.reason) from None
    return Point(x, y)


def format_point(p: Point) -> str:
    return str(p)


_FRAC = {"type": "string", "pattern": r"^-?[0-9]+/[1-9][0-9]*$"}

SCALAR_SCHEMA = {
    "type": "object",
    "properties": {"r": _FRAC, "t": _FRAC},
    "required": ["r", "t"],
    "additionalProperties": False,
}

POINT_SCHEMA = {
    "type": "object",
    "properties": {"x": SCALAR_SCHEMA, "y": SCALAR_SCHEMA},
    "required": ["x", "y"],
    "additionalProperties": False,
}

DECOMPOSITION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "orbit product decomposition",
    "type": "object",
    "properties": {
        "group": {"enum": [g.value for g in GroupId]},
        "lambda": POINT_SCHEMA,
        "mu": POINT_SCHEMA,
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"dominant": POINT_SCHEMA, "multiplicity": _FRAC},
                "required": ["dominant", "multiplicity"],
                "additionalProperties": False,
            },
        },
        "conserved": {"type": "boolean"},
        "congruence_class": {"type": ["integer", "null"]},
    },
    "required": ["group", "lambda", "mu", "terms", "conserved", "congruence_class"],
    "additionalProperties": False,
}


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def decomposition_to_json(d: Decomposition) -> dict:
    if d.lam is None or d.mu is None:
        raise ValueError("serialising a decomposition needs both factors")
    return {
        "group": d.group.value,
        "lambda": d.lam.to_json(),
        "mu": d.mu.to_json(),
        "terms": [{"dominant": t.dominant.to_json(), "multiplicity": _frac(t.multiplicity)}
                  for t in d.terms],
        "conserved": d.is_conserved(),
        "congruence_class": d.congruence_class(),
    }


def decomposition_from_json(obj: dict) -> Decomposition:
    g = GroupId.coerce(obj["group"])
    terms = [Term(Point.from_json(t["dominant"]), Fraction(t["multiplicity"]))
             for t in obj["terms"]]
    return Decomposition.merge(g, terms, Point.from_json(obj["lambda"]),
                               Point.from_json(obj["mu"]), check=False)


def dumps(d: Decomposition, indent: int | None = 2) -> str:
    return json.dumps(decomposition_to_json(d), indent=indent, sort_keys=False)


def loads(text: str) -> Decomposition:
    return decomposition_from_json(json.loads(text))
