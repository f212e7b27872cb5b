"""Serialization: family and drawing JSON, graph text files, run reports.

Coordinates in files stay exact: integers are plain JSON numbers, other
rationals are "p/q" strings, and decimal literals parse to the exact rational
they denote. With inexact=True decimal literals are read as IEEE doubles
instead (then converted to the exact rational of the double). Emission is
canonical (sorted keys, fixed indentation), so parse-emit round trips are
byte-stable and reports are reproducible.
"""
from __future__ import annotations

import decimal
import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ParseError, SchemaError
from .geometry import Coord, Point, Polyline, StringFamily, exact_coord
from .graph import Graph
from .quasiplanar import DrawnEdge, Drawing


# ---------------------------------------------------------------------------
# Exact numbers.

def _exact_decimal(text: str) -> Fraction:
    return Fraction(decimal.Decimal(text))


def _reject_constant(text: str):
    raise SchemaError(f"non-finite number {text!r} is not allowed")


def _loads(text: str, inexact: bool = False):
    try:
        if inexact:
            return json.loads(text, parse_constant=_reject_constant)
        return json.loads(text, parse_float=_exact_decimal,
                          parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc


def _coord_in(value, where: str) -> Coord:
    if isinstance(value, bool):
        raise SchemaError(f"{where}: coordinate cannot be a boolean")
    if isinstance(value, (int, float, Fraction)):
        try:
            return exact_coord(value)
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    if isinstance(value, str):
        try:
            return exact_coord(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"{where}: bad coordinate {value!r}") from exc
    raise SchemaError(f"{where}: unsupported coordinate type {type(value).__name__}")


def _coord_out(c: Coord) -> Union[int, str]:
    if isinstance(c, int):
        return c
    return f"{c.numerator}/{c.denominator}"


def _point_in(value, where: str) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise SchemaError(f"{where}: a point must be a two-element array")
    return Point(_coord_in(value[0], where), _coord_in(value[1], where))


def _points_in(value, where: str) -> tuple[Point, ...]:
    if not isinstance(value, list) or len(value) < 2:
        raise SchemaError(f"{where}: need an array of at least 2 points")
    return tuple(_point_in(p, f"{where}[{i}]") for i, p in enumerate(value))


def _point_out(p: Point) -> list:
    return [_coord_out(p.x), _coord_out(p.y)]


# ---------------------------------------------------------------------------
# String families.

def family_to_obj(family: StringFamily) -> dict:
    return {"kind": "family",
            "strings": [{"id": s.id, "points": [_point_out(p) for p in s.points]}
                        for s in family.strings]}


def family_from_obj(obj) -> StringFamily:
    if not isinstance(obj, dict) or not isinstance(obj.get("strings"), list):
        raise SchemaError("family file needs a top-level 'strings' array",
                          field="strings")
    strings = []
    for i, raw in enumerate(obj["strings"]):
        where = f"strings[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: each string must be an object")
        sid = raw.get("id")
        if not isinstance(sid, str) or not sid:
            raise SchemaError(f"{where}: missing string id", field="id")
        try:
            strings.append(Polyline(sid, _points_in(raw.get("points"), where)))
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
    return StringFamily(tuple(strings))


# ---------------------------------------------------------------------------
# Drawings.

def drawing_to_obj(drawing: Drawing) -> dict:
    return {"kind": "drawing",
            "vertices": [_point_out(p) for p in drawing.vertices],
            "edges": [{"u": e.u, "v": e.v,
                       "points": [_point_out(p) for p in e.curve.points]}
                      for e in drawing.edges]}


def drawing_from_obj(obj) -> Drawing:
    if not isinstance(obj, dict):
        raise SchemaError("drawing file must be a JSON object")
    if not isinstance(obj.get("vertices"), list):
        raise SchemaError("drawing file needs a 'vertices' array", field="vertices")
    if not isinstance(obj.get("edges"), list):
        raise SchemaError("drawing file needs an 'edges' array", field="edges")
    verts = tuple(_point_in(p, f"vertices[{i}]") for i, p in enumerate(obj["vertices"]))
    edges = []
    for k, raw in enumerate(obj["edges"]):
        where = f"edges[{k}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: each edge must be an object")
        u, v = raw.get("u"), raw.get("v")
        if not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool):
            raise SchemaError(f"{where}: u and v must be integers")
        try:
            curve = Polyline(f"e{k}", _points_in(raw.get("points"), where))
        except ValueError as exc:
            raise SchemaError(f"{where}: {exc}") from exc
        edges.append(DrawnEdge(u, v, curve))
    try:
        return Drawing(verts, tuple(edges))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Unified input loading.

def parse_input(text: str, inexact: bool = False) -> Union[StringFamily, Drawing]:
    """Load a family or drawing JSON document, telling them apart by shape."""
    obj = _loads(text, inexact)
    if not isinstance(obj, dict):
        raise SchemaError("input must be a JSON object")
    kind = obj.get("kind")
    if kind == "family" or (kind is None and "strings" in obj):
        return family_from_obj(obj)
    if kind == "drawing" or (kind is None and "vertices" in obj and "edges" in obj):
        return drawing_from_obj(obj)
    raise SchemaError("cannot tell whether this is a family or a drawing", field="kind")


def parse_family(text: str, inexact: bool = False) -> StringFamily:
    loaded = parse_input(text, inexact)
    if not isinstance(loaded, StringFamily):
        raise SchemaError("expected a family file, got a drawing")
    return loaded


def parse_drawing(text: str, inexact: bool = False) -> Drawing:
    loaded = parse_input(text, inexact)
    if not isinstance(loaded, Drawing):
        raise SchemaError("expected a drawing file, got a family")
    return loaded


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def family_json(family: StringFamily) -> str:
    return _dumps(family_to_obj(family))


def drawing_json(drawing: Drawing) -> str:
    return _dumps(drawing_to_obj(drawing))


# ---------------------------------------------------------------------------
# Graph text files: "n m" then one "u v" line per edge, 0-indexed.

def graph_text(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body))
    if not rows:
        raise ParseError("empty graph file", line=1)
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise ParseError("header must hold two integers", line=lineno) from exc
    if n < 0 or m < 0:
        raise SchemaError("vertex and edge counts cannot be negative")
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}",
                         line=rows[-1][0])
    edges = []
    seen = set()
    for lineno, body in rows[1:]:
        parts = body.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError("edge line must hold two integers", line=lineno) from exc
        if not (0 <= u < n and 0 <= v < n):
            raise SchemaError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SchemaError(f"self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise SchemaError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Run reports.

@dataclass(frozen=True)
class RunReport:
    operation: str
    input_digest: str
    parameters: dict
    result: dict
    verification: dict
    timings: Optional[dict] = None


def _json_default(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def report_json(report: RunReport) -> str:
    """Canonical JSON for a run: sorted keys, no timings unless requested."""
    obj = {"operation": report.operation,
           "input_digest": report.input_digest,
           "parameters": report.parameters,
           "result": report.result,
           "verification": report.verification}
    if report.timings is not None:
        obj["timings"] = report.timings
    return json.dumps(obj, sort_keys=True, indent=2, default=_json_default) + "\n"


def sha256_digest(data: Union[str, bytes]) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()
