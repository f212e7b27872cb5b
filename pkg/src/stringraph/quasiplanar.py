"""Edge truncation of graph drawings and quasiplanarity certificates.

A drawing maps vertices to distinct points and edges to curves joining their
endpoint points. Truncating every curve just outside small disks around its
two endpoints removes the contacts at shared endpoints while keeping every
genuine crossing, so the intersection graph of the truncated curves records
exactly which edge pairs cross. All cut computations run on exact rationals;
the automatic radius is the largest value that is provably safe for the given
drawing, and any smaller positive radius yields the same crossing graph.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DegenerateDrawing, DomainError, ExtractorViolation, PreconditionViolated
from .extract import DEFAULT_PARAMS, AlgorithmParams, ExtractionWitness, q_independent_set
from .geometry import (Point, Polyline, StringFamily, dist_sq, exact_coord,
                       interpolate, intersection_graph, point_segment_dist_sq,
                       segment_intersection_points)
from .graph import Graph, clique_in_mask, find_clique, mask_of

Radius = Union[str, int, float, Fraction]


@dataclass(frozen=True)
class DrawnEdge:
    u: int
    v: int
    curve: Polyline


@dataclass(frozen=True)
class Drawing:
    """Vertex points plus one curve per edge of a simple abstract graph.

    Vertex points are pairwise distinct; each curve runs from its first
    endpoint's point to its second's; loops and repeated unordered pairs are
    rejected.
    """

    vertices: tuple[Point, ...]
    edges: tuple[DrawnEdge, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(set(verts)) != len(verts):
            raise ValueError("vertex points must be pairwise distinct")
        seen: set[frozenset] = set()
        for k, e in enumerate(self.edges):
            if not (0 <= e.u < len(verts) and 0 <= e.v < len(verts)):
                raise ValueError(f"edge {k} references a missing vertex")
            if e.u == e.v:
                raise ValueError(f"edge {k} is a loop")
            pair = frozenset((e.u, e.v))
            if pair in seen:
                raise ValueError(f"edge {k} repeats the pair ({e.u}, {e.v})")
            seen.add(pair)
            if e.curve.points[0] != verts[e.u] or e.curve.points[-1] != verts[e.v]:
                raise ValueError(f"curve of edge {k} does not join its endpoint points")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)


def _auto_radius_sq(drawing: Drawing) -> Fraction:
    """Exact square of the automatic truncation radius.

    The radius is half the smallest clearance, where clearances are: vertex
    to non-incident curve, vertex to any contact point of two distinct edges
    away from a shared endpoint, and half the closest vertex-vertex distance.
    The last term keeps every curve strictly longer than four radii, so both
    cuts exist and leave a curve of positive length.
    """
    verts = drawing.vertices
    best: Optional[Fraction] = None

    def shrink(val) -> None:
        nonlocal best
        f = Fraction(val)
        if best is None or f < best:
            best = f

    for w, pw in enumerate(verts):
        for e in drawing.edges:
            if w == e.u or w == e.v:
                continue
            for a, b in e.curve.segments():
                d2 = point_segment_dist_sq(pw, a, b)
                if d2 == 0:
                    raise DegenerateDrawing(
                        f"vertex {w} lies on the curve of edge ({e.u}, {e.v})")
                shrink(d2)
    vset = set(verts)
    for i in range(drawing.m):
        for j in range(i + 1, drawing.m):
            ei, ej = drawing.edges[i], drawing.edges[j]
            shared = {ei.u, ei.v} & {ej.u, ej.v}
            for a, b in ei.curve.segments():
                for c, d in ej.curve.segments():
                    for x in segment_intersection_points(a, b, c, d):
                        if any(x == verts[t] for t in shared):
                            continue
                        if x in vset:
                            raise DegenerateDrawing(
                                f"edges ({ei.u}, {ei.v}) and ({ej.u}, {ej.v}) "
                                "meet at a vertex point")
                        for pw in verts:
                            shrink(dist_sq(pw, x))
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            shrink(Fraction(dist_sq(verts[i], verts[j]), 4))
    if best is None:
        raise DegenerateDrawing("drawing has no clearance to truncate within")
    return best / 4


def _first_exit(pts: tuple[Point, ...], center: Point, rho_sq: Fraction,
                edge_index: int) -> tuple[int, Fraction, Point]:
    """First point along pts leaving the open disk around center.

    Returns (segment index, parameter, point) with the point's distance d
    satisfying rho <= d < 1.5 * rho, found by dyadic bisection. Squared
    distance is convex along a segment, so a segment with both endpoints
    inside the disk lies wholly inside and can be skipped.
    """
    limit = Fraction(9, 4) * rho_sq
    for k in range(len(pts) - 1):
        a, b = pts[k], pts[k + 1]
        if dist_sq(b, center) < rho_sq:
            continue
        lo, hi = Fraction(0), Fraction(1)
        point = interpolate(a, b, hi)
        guard = 0
        while dist_sq(point, center) >= limit:
            mid = (lo + hi) / 2
            if dist_sq(interpolate(a, b, mid), center) >= rho_sq:
                hi = mid
                point = interpolate(a, b, hi)
            else:
                lo = mid
            guard += 1
            if guard > 512:
                raise DegenerateDrawing("truncation cut search did not converge")
        return k, hi, point
    raise DegenerateDrawing(
        f"edge {edge_index} lies entirely inside an endpoint disk; use a smaller radius")


def truncate_edges(drawing: Drawing, radius: Radius = "auto") -> StringFamily:
    """Clip every edge curve to the part outside its two endpoint disks.

    Returns one string per edge, labeled e0..e{m-1} in edge order. With the
    automatic radius, contacts at shared endpoints disappear while every
    crossing point survives; with an explicit radius the caller owns those
    guarantees.
    """
    if drawing.m == 0:
        return StringFamily(())
    if radius == "auto":
        rho_sq = _auto_radius_sq(drawing)
    else:
        r = exact_coord(radius)
        if r <= 0:
            raise ValueError("radius must be strictly positive")
        rho_sq = Fraction(r) * Fraction(r)
    strings = []
    for k, e in enumerate(drawing.edges):
        pts = e.curve.points
        ku, tu, pu = _first_exit(pts, drawing.vertices[e.u], rho_sq, k)
        rev = tuple(reversed(pts))
        kr, tr, pv = _first_exit(rev, drawing.vertices[e.v], rho_sq, k)
        kv = len(pts) - 2 - kr
        tv = 1 - tr
        if (ku, tu) >= (kv, tv):
            raise DegenerateDrawing(
                f"radius consumes edge ({e.u}, {e.v}); use a smaller radius")
        mid = [pu] + list(pts[ku + 1:kv + 1]) + [pv]
        out = [mid[0]]
        for p in mid[1:]:
            if p != out[-1]:
                out.append(p)
        if len(out) < 2:
            raise DegenerateDrawing(
                f"radius collapses edge ({e.u}, {e.v}) to a point; use a smaller radius")
        strings.append(Polyline(f"e{k}", tuple(out)))
    return StringFamily(tuple(strings))


def crossing_graph(drawing: Drawing, radius: Radius = "auto") -> Graph:
    """Graph on the drawing's edges, adjacent iff their truncated curves meet."""
    if drawing.m == 0:
        return Graph((), ())
    return intersection_graph(truncate_edges(drawing, radius))


def is_r_quasiplanar(drawing: Drawing, r: int,
                     radius: Radius = "auto") -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether no r edges pairwise cross; if some do, also return r edge indices."""
    if r < 2:
        raise ValueError("r must be at least 2")
    cg = crossing_graph(drawing, radius)
    if cg.n == 0:
        return True, None
    witness = find_clique(cg, r)
    if witness is None:
        return True, None
    return False, witness


def sparse_subgraph(drawing: Drawing, s: int,
                    params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    """Extract an edge subset whose restriction is 4-quasiplanar.

    The drawing must be 2^s-quasiplanar (verified; violations raise
    PreconditionViolated carrying 2^s pairwise crossing edges). The witness
    vertices are edge indices, and the restricted crossing graph is
    re-checked to contain no 4 pairwise crossing edges before returning.
    """
    params = params or DEFAULT_PARAMS
    if s < 3:
        raise ValueError("s must be at least 3")
    cg = crossing_graph(drawing)
    if cg.n == 0:
        return ExtractionWitness(
            "q_independent", (),
            {"s": s, "q": 2, "p": 4, "floor": 0, "fallbacks": 0,
             "found_clique": None, "edges_total": 0, "four_quasiplanar": True})
    try:
        inner = q_independent_set(cg, s, 2, params)
    except PreconditionViolated as exc:
        raise PreconditionViolated(
            f"drawing is not {2 ** s}-quasiplanar", witness=exc.witness) from exc
    bad = clique_in_mask(cg, mask_of(inner.vertices), 4)
    if bad is not None:
        raise ExtractorViolation("extracted edges still contain 4 pairwise crossings")
    cert = dict(inner.certificate)
    cert["edges_total"] = cg.n
    cert["four_quasiplanar"] = True
    return ExtractionWitness("q_independent", inner.vertices, cert)


def edge_bound(n: int, s: int, C: float = 1.0) -> float:
    """Upper bound n * (C * log2(n) / s)^(2s-4) on the edge count of any
    n-vertex graph admitting a 2^s-quasiplanar drawing."""
    if s < 3:
        raise ValueError("s must be at least 3")
    if C <= 0:
        raise ValueError("C must be strictly positive")
    if n < 2 ** s:
        raise DomainError(f"bound needs n >= 2^s = {2 ** s}, got n = {n}")
    return n * (C * math.log2(n) / s) ** (2 * s - 4)


def edge_bound_holds(n: int, m: int, s: int, C: float = 1.0) -> bool:
    """Whether an edge count m is within edge_bound(n, s, C)."""
    if m < 0:
        raise ValueError("edge count cannot be negative")
    return m <= edge_bound(n, s, C)


def dense_threshold(n: int, epsilon: float) -> float:
    """Edge count 3 * n^(1+epsilon) beyond which, for large enough n, every
    drawing has many pairwise crossing edges."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if epsilon <= 0:
        raise ValueError("epsilon must be strictly positive")
    return 3.0 * n ** (1.0 + epsilon)


def convex_interleaving_graph(n: int) -> Graph:
    """Crossing pattern of the straight-line complete graph on n points in
    convex position: one vertex per chord in pair order, adjacent iff the
    chords' endpoints interleave around the circle."""
    if n < 1:
        raise ValueError("n must be at least 1")
    chords = list(itertools.combinations(range(n), 2))
    edges = []
    for i, (a, b) in enumerate(chords):
        for j in range(i + 1, len(chords)):
            c, d = chords[j]
            if a < c < b < d or c < a < d < b:
                edges.append((i, j))
    labels = tuple(f"e{k}" for k in range(len(chords)))
    return Graph.from_edges(len(chords), edges, labels=labels)
