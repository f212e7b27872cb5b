"""Planar polyline strings and exact pairwise-intersection tests.

All predicates run on exact arithmetic: coordinates are ints or Fractions,
orientation signs are computed without rounding, so two runs on the same
input always build the same graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DuplicateId
from .graph import Graph

Coord = Union[int, Fraction]


def exact_coord(value) -> Coord:
    """Convert a parsed number (int, float, decimal/ratio string, Fraction) to an exact coordinate.

    Integral values are normalized to int, which keeps the hot orientation
    arithmetic on machine integers.
    """
    if isinstance(value, bool):
        raise TypeError("coordinate cannot be a bool")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"coordinate must be finite, got {value!r}")
        value = Fraction(value)
    elif isinstance(value, str):
        value = Fraction(value)
    elif not isinstance(value, Fraction):
        raise TypeError(f"unsupported coordinate type {type(value).__name__}")
    return int(value) if value.denominator == 1 else value


@dataclass(frozen=True, slots=True)
class Point:
    x: Coord
    y: Coord

    def __post_init__(self):
        for c in (self.x, self.y):
            if not isinstance(c, (int, Fraction)) or isinstance(c, bool):
                raise TypeError(f"coordinates must be int or Fraction, got {type(c).__name__}")

    def translated(self, dx: Coord, dy: Coord) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True)
class Polyline:
    """A labeled open curve, stored as a chain of >= 2 points."""

    id: str
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError(f"polyline {self.id!r} needs at least 2 points")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError(f"polyline {self.id!r} has consecutive duplicate point {a}")

    def segments(self) -> list[tuple[Point, Point]]:
        return list(zip(self.points, self.points[1:]))

    def bbox(self) -> tuple[Coord, Coord, Coord, Coord]:
        xs = [p.x for p in self.points]
        ys = [p.y for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)

    def translated(self, dx: Coord, dy: Coord) -> "Polyline":
        return Polyline(self.id, tuple(p.translated(dx, dy) for p in self.points))


@dataclass(frozen=True)
class StringFamily:
    strings: tuple[Polyline, ...]

    def __post_init__(self):
        strs = tuple(self.strings)
        object.__setattr__(self, "strings", strs)
        seen = set()
        for s in strs:
            if s.id in seen:
                raise DuplicateId(f"duplicate string id {s.id!r}")
            seen.add(s.id)

    def __len__(self):
        return len(self.strings)

    def translated(self, dx: Coord, dy: Coord) -> "StringFamily":
        return StringFamily(tuple(s.translated(dx, dy) for s in self.strings))


def orientation_sign(o: Point, a: Point, b: Point) -> int:
    """Sign of the cross product (a-o) x (b-o): +1 ccw, -1 cw, 0 collinear."""
    cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def _within_bbox(p: Point, a: Point, b: Point) -> bool:
    # Assumes p collinear with a-b; reduces to a coordinate range check.
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the closed segments p1-p2 and q1-q2 share at least one point.

    Endpoint and tangential contact count; collinear overlap counts.
    """
    d1 = orientation_sign(q1, q2, p1)
    d2 = orientation_sign(q1, q2, p2)
    d3 = orientation_sign(p1, p2, q1)
    d4 = orientation_sign(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _within_bbox(p1, q1, q2):
        return True
    if d2 == 0 and _within_bbox(p2, q1, q2):
        return True
    if d3 == 0 and _within_bbox(q1, p1, p2):
        return True
    if d4 == 0 and _within_bbox(q2, p1, p2):
        return True
    return False


def polylines_intersect(p: Polyline, q: Polyline, prefilter: bool = True) -> bool:
    """True iff some segment of p meets some segment of q.

    The bounding-box prefilter only skips pairs whose boxes are disjoint, so
    it never changes the answer.
    """
    if prefilter:
        px0, py0, px1, py1 = p.bbox()
        qx0, qy0, qx1, qy1 = q.bbox()
        if px1 < qx0 or qx1 < px0 or py1 < qy0 or qy1 < py0:
            return False
    psegs = p.segments()
    qsegs = q.segments()
    if prefilter:
        qboxes = [(min(a.x, b.x), min(a.y, b.y), max(a.x, b.x), max(a.y, b.y)) for a, b in qsegs]
        for a, b in psegs:
            ax0, ax1 = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
            ay0, ay1 = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
            for (c, d), (bx0, by0, bx1, by1) in zip(qsegs, qboxes):
                if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
                    continue
                if segments_intersect(a, b, c, d):
                    return True
        return False
    for a, b in psegs:
        for c, d in qsegs:
            if segments_intersect(a, b, c, d):
                return True
    return False


def dist_sq(p: Point, q: Point) -> Coord:
    """Exact squared Euclidean distance between two points."""
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def interpolate(a: Point, b: Point, t: Fraction) -> Point:
    """The point a + t*(b - a), exact for rational t."""
    return Point(exact_coord(a.x + t * (b.x - a.x)), exact_coord(a.y + t * (b.y - a.y)))


def point_segment_dist_sq(p: Point, a: Point, b: Point) -> Coord:
    """Exact squared distance from p to the closed segment a-b."""
    abx = b.x - a.x
    aby = b.y - a.y
    apx = p.x - a.x
    apy = p.y - a.y
    denom = abx * abx + aby * aby
    if denom == 0:
        return apx * apx + apy * apy
    t = Fraction(apx * abx + apy * aby, denom)
    if t <= 0:
        return apx * apx + apy * apy
    if t >= 1:
        return dist_sq(p, b)
    fx = apx - t * abx
    fy = apy - t * aby
    return exact_coord(fx * fx + fy * fy)


def segment_intersection_points(p1: Point, p2: Point, q1: Point, q2: Point) -> list[Point]:
    """All contact points of the closed segments p1-p2 and q1-q2, exactly.

    Returns [] when disjoint, one point for a crossing or touch, and the two
    overlap endpoints when collinear segments share more than a point.
    """
    d1 = orientation_sign(q1, q2, p1)
    d2 = orientation_sign(q1, q2, p2)
    d3 = orientation_sign(p1, p2, q1)
    d4 = orientation_sign(p1, p2, q2)
    if d1 == 0 and d2 == 0:
        # Same supporting line: intersect the two parameter intervals.
        def key(pt: Point):
            return (pt.x, pt.y)

        lo_p, hi_p = (p1, p2) if key(p1) <= key(p2) else (p2, p1)
        lo_q, hi_q = (q1, q2) if key(q1) <= key(q2) else (q2, q1)
        start = lo_p if key(lo_p) >= key(lo_q) else lo_q
        end = hi_p if key(hi_p) <= key(hi_q) else hi_q
        if key(start) > key(end):
            return []
        if start == end:
            return [start]
        return [start, end]
    if d1 * d2 < 0 and d3 * d4 < 0:
        rx = p2.x - p1.x
        ry = p2.y - p1.y
        sx = q2.x - q1.x
        sy = q2.y - q1.y
        t = Fraction((q1.x - p1.x) * sy - (q1.y - p1.y) * sx, rx * sy - ry * sx)
        return [interpolate(p1, p2, t)]
    out: list[Point] = []
    if d1 == 0 and _within_bbox(p1, q1, q2):
        out.append(p1)
    if d2 == 0 and _within_bbox(p2, q1, q2):
        out.append(p2)
    if d3 == 0 and _within_bbox(q1, p1, p2):
        out.append(q1)
    if d4 == 0 and _within_bbox(q2, p1, p2):
        out.append(q2)
    seen: list[Point] = []
    for pt in out:
        if pt not in seen:
            seen.append(pt)
    return seen


def intersection_graph(family: StringFamily | Iterable[Polyline], prefilter: bool = True) -> Graph:
    """Build the intersection graph: one vertex per string, an edge iff the curves meet."""
    if isinstance(family, StringFamily):
        strings = family.strings
    else:
        strings = tuple(family)
        seen = set()
        for s in strings:
            if s.id in seen:
                raise DuplicateId(f"duplicate string id {s.id!r}")
            seen.add(s.id)
    if not strings:
        raise ValueError("cannot build the intersection graph of an empty family")
    n = len(strings)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if polylines_intersect(strings[i], strings[j], prefilter=prefilter):
                edges.append((i, j))
    return Graph.from_edges(n, edges, labels=tuple(s.id for s in strings))
