"""Canonical JSON file formats shared by the library and the CLI.

One format family: JSON objects with integer arrays (whitespace-insensitive,
integers unbounded).  Emission is deterministic: sorted keys, fixed
indentation, innermost integer arrays rendered inline; identical data gives
byte-identical files.
"""

from __future__ import annotations

import json
import re

from .circuitflip import FlipMove
from .fan import Fan, ValidationReport
from .polytope import LatticePolytope, hull
from .smoothcert import SmoothnessCertificate

_INLINE_INTS = re.compile(r"\[\s+((?:-?\d+,\s+)*-?\d+)\s+\]")


def dumps(obj) -> str:
    text = json.dumps(obj, sort_keys=True, indent=2)
    text = _INLINE_INTS.sub(
        lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text
    )
    return text + "\n"


class FormatError(ValueError):
    """Structurally invalid file content (wrong keys or non-integer entries)."""


def _int_matrix(obj, what):
    if not isinstance(obj, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) for x in row)
        for row in obj
    ):
        raise FormatError(f"{what} must be an array of integer arrays")
    return [tuple(row) for row in obj]


def _require(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"missing field {key!r} in {what}")
    return obj[key]


def polytope_to_obj(p: LatticePolytope) -> dict:
    return {"dim": p.dim, "vertices": [list(v) for v in p.vertices]}


def polytope_from_obj(obj) -> LatticePolytope:
    dim = _require(obj, "dim", "polytope")
    vertices = _int_matrix(_require(obj, "vertices", "polytope"), "vertices")
    if not isinstance(dim, int):
        raise FormatError("dim must be an integer")
    if any(len(v) != dim for v in vertices):
        raise FormatError("vertex length does not match dim")
    return hull(vertices)


def fan_to_obj(fan: Fan) -> dict:
    return {
        "dim": fan.dim,
        "points": [list(p) for p in fan.points],
        "max_cones": [list(c) for c in fan.max_cones],
    }


def fan_from_obj(obj) -> Fan:
    dim = _require(obj, "dim", "fan")
    points = _int_matrix(_require(obj, "points", "fan"), "points")
    cones = _int_matrix(_require(obj, "max_cones", "fan"), "max_cones")
    if not isinstance(dim, int):
        raise FormatError("dim must be an integer")
    order = sorted(range(len(points)), key=lambda i: points[i])
    remap = {old: new for new, old in enumerate(order)}
    table = tuple(points[i] for i in order)
    try:
        return Fan(dim, table, [tuple(sorted(remap[i] for i in c)) for c in cones])
    except (ValueError, IndexError, KeyError) as exc:
        raise FormatError(f"invalid fan data: {exc}") from exc


def move_to_obj(move: FlipMove) -> dict:
    return {
        "support": list(move.support),
        "coeffs": list(move.coeffs),
        "removed": [list(c) for c in move.removed],
        "added": [list(c) for c in move.added],
        "wall_cones": [list(c) for c in move.wall_cones],
    }


def move_from_obj(obj) -> FlipMove:
    support = _require(obj, "support", "move")
    coeffs = _require(obj, "coeffs", "move")
    if not all(isinstance(x, int) for x in support + coeffs):
        raise FormatError("move support and coeffs must be integer arrays")
    return FlipMove(
        tuple(support),
        tuple(coeffs),
        tuple(tuple(c) for c in _int_matrix(_require(obj, "removed", "move"), "removed")),
        tuple(tuple(c) for c in _int_matrix(_require(obj, "added", "move"), "added")),
        tuple(tuple(c) for c in _int_matrix(_require(obj, "wall_cones", "move"), "wall_cones")),
    )


def report_to_obj(report: ValidationReport) -> dict:
    return {
        "verdict": report.verdict,
        "violations": [
            {"kind": v.kind, "detail": v.detail} for v in report.violations
        ],
    }


def certificate_to_obj(cert: SmoothnessCertificate) -> dict:
    return {
        "fan_id": cert.fan_id,
        "overall": cert.overall,
        "cones": [
            {
                "cone": list(e.cone),
                "class": e.label,
                "sum": list(e.sum_vector),
                "multiplicity": e.multiplicity,
                "witness": list(e.witness) if e.witness is not None else None,
            }
            for e in cert.entries
        ],
    }


def load(path, parser):
    """Parse a JSON file through `parser`, mapping all failures to exceptions
    that carry line/column where available."""
    with open(path) as fh:
        text = fh.read()
    obj = json.loads(text)  # json.JSONDecodeError carries lineno/colno
    return parser(obj)
