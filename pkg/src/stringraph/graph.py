"""Bitset-backed simple undirected graphs.

Adjacency is one Python int per vertex, so neighborhood intersection,
independence checks and clique search all reduce to integer bit operations.
Graphs are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .errors import DegenerateGraph, ExtractorViolation, UnknownVertex


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]],
                   labels: Optional[tuple[str, ...]] = None) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if labels is None:
            labels = tuple(f"v{i}" for i in range(n))
        if len(labels) != n:
            raise ValueError("label count must equal vertex count")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(labels=tuple(labels), adj=tuple(adj))

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(higher):
                out.append((u, v))
        return out

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(labels=self.labels,
                     adj=tuple((full & ~a & ~(1 << v)) for v, a in enumerate(self.adj)))

    def validate(self) -> None:
        n = self.n
        for v, a in enumerate(self.adj):
            if a >> n:
                raise UnknownVertex(f"adjacency of {v} references vertices >= {n}")
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(a):
                if not (self.adj[u] >> v & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertices (sorted order), labels carried over."""
    vs = sorted(set(vertices))
    if any(v < 0 or v >= G.n for v in vs):
        raise UnknownVertex(f"vertex set {vs} not contained in 0..{G.n - 1}")
    pos = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    vmask = mask_of(vs)
    for v in vs:
        for u in bits(G.adj[v] & vmask):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(labels=tuple(G.labels[v] for v in vs), adj=tuple(adj))


def average_degree(G: Graph) -> Fraction:
    if G.n < 1:
        raise DegenerateGraph("average degree needs at least one vertex")
    return Fraction(2 * G.m, G.n)


def edge_density(G: Graph) -> Fraction:
    if G.n < 2:
        raise DegenerateGraph("edge density needs at least two vertices")
    return Fraction(G.m, G.n * (G.n - 1) // 2)


# ---------------------------------------------------------------------------
# Masked helpers: operate on a vertex subset of G given as a bitmask, so the
# recursive extractors never have to re-index vertices.

def edges_in_mask(G: Graph, mask: int) -> int:
    return sum((G.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def components_masked(G: Graph, mask: int) -> list[int]:
    """Connected components of G[mask] as masks, ordered by smallest member."""
    comps = []
    remaining = mask
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            neighbors = 0
            for v in bits(frontier):
                neighbors |= G.adj[v]
            frontier = neighbors & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def _greedy_color_classes(G: Graph, cand: int) -> int:
    """Number of greedy color classes of G[cand]; an upper bound on its clique number."""
    classes: list[int] = []
    for v in bits(cand):
        av = G.adj[v]
        for i, cls in enumerate(classes):
            if not (av & cls):
                classes[i] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
    return len(classes)


def clique_in_mask(G: Graph, mask: int, k: int) -> Optional[tuple[int, ...]]:
    """Exact search for k pairwise-adjacent vertices inside mask; None if none exist.

    Backtracking over candidates in increasing index order with a
    greedy-coloring bound for pruning; the first clique found is returned,
    which makes the output deterministic.
    """
    if k <= 0:
        raise ValueError("clique size must be positive")
    if k > mask.bit_count():
        return None
    if k == 1:
        return ((mask & -mask).bit_length() - 1,)
    adj = G.adj

    def expand(current: list[int], cand: int) -> Optional[tuple[int, ...]]:
        need = k - len(current)
        if need == 0:
            return tuple(current)
        if cand.bit_count() < need:
            return None
        if need >= 3 and _greedy_color_classes(G, cand) < need:
            return None
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if rest.bit_count() + 1 < need:
                return None
            current.append(v)
            got = expand(current, rest & adj[v])
            if got is not None:
                return got
            current.pop()
        return None

    return expand([], mask)


def find_clique(G: Graph, k: int) -> Optional[tuple[int, ...]]:
    """Exact: k pairwise-adjacent vertices of G, or None when no k-clique exists."""
    if k <= 0:
        raise ValueError("clique size must be positive")
    return clique_in_mask(G, G.full_mask, k)


def is_independent(G: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (G.adj[v] & m) for v in bits(m))


@dataclass(frozen=True)
class Coloring:
    """A partition of the vertices into independent classes."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def num_colors(self) -> int:
        return len(self.classes)


def validate_coloring(G: Graph, coloring: Coloring) -> None:
    seen = 0
    for cls in coloring.classes:
        cmask = mask_of(cls)
        if cmask & seen:
            raise ValueError("color classes overlap")
        if not is_independent(G, cls):
            raise ValueError("a color class is not independent")
        seen |= cmask
    if seen != G.full_mask:
        raise ValueError("color classes do not cover all vertices")


def greedy_color(G: Graph, extractor: Callable[[tuple[int, ...]], Iterable[int]]) -> Coloring:
    """Color by repeatedly extracting an independent set from the remaining vertices.

    The extractor receives the remaining vertices (original indices) and must
    return a non-empty subset that is independent in G; its output is checked
    every round rather than trusted.
    """
    remaining = G.full_mask
    classes: list[tuple[int, ...]] = []
    while remaining:
        chosen = tuple(sorted(extractor(tuple(bits(remaining)))))
        cmask = mask_of(chosen)
        if not chosen:
            raise ExtractorViolation("extractor returned an empty set")
        if cmask & ~remaining:
            raise ExtractorViolation("extractor returned vertices outside the remaining set")
        if not is_independent(G, chosen):
            raise ExtractorViolation("extractor returned a non-independent set")
        classes.append(chosen)
        remaining &= ~cmask
    return Coloring(classes=tuple(classes))
