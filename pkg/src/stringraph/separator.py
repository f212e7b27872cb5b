"""Balanced vertex separators.

A separator partition splits V into S, V1, V2 with no V1-V2 edge and both
sides of size at most ceil(2n/3). The contract is balance plus non-adjacency;
separator size is best-effort for the heuristic strategies and minimum for the
exact one.
"""
from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import TooLarge
from .graph import Graph, bits, components_masked, mask_of

_EXACT_LIMIT = 14


def balance_cap(n: int) -> int:
    """ceil(2n/3), the maximum allowed side size."""
    return (2 * n + 2) // 3


@dataclass(frozen=True)
class SeparatorPartition:
    S: tuple[int, ...]
    V1: tuple[int, ...]
    V2: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.S)


def validate_partition(G: Graph, part: SeparatorPartition) -> None:
    s_mask = mask_of(part.S)
    v1 = mask_of(part.V1)
    v2 = mask_of(part.V2)
    if len(part.S) + len(part.V1) + len(part.V2) != G.n:
        raise ValueError("S, V1, V2 must partition the vertex set")
    if (s_mask | v1 | v2) != G.full_mask or (s_mask & v1) or (s_mask & v2) or (v1 & v2):
        raise ValueError("S, V1, V2 must partition the vertex set")
    cap = balance_cap(G.n)
    if len(part.V1) > cap or len(part.V2) > cap:
        raise ValueError(f"side exceeds balance cap {cap}")
    for v in bits(v1):
        if G.adj[v] & v2:
            raise ValueError(f"edge joins V1 and V2 at vertex {v}")


def _pack_two_bins(sizes: Sequence[int], cap: int) -> Optional[list[int]]:
    """Partition chunk sizes into two bins of load <= cap.

    Subset sums via one bitmask; the chosen first-bin load is the feasible sum
    closest to half the total, ties to the smaller sum. Returns chunk indices
    for bin one, or None.
    """
    total = sum(sizes)
    reach = 1
    prefix = []
    for c in sizes:
        prefix.append(reach)
        reach |= reach << c
    best: Optional[int] = None
    for s1 in range(0, min(cap, total) + 1):
        if total - s1 > cap:
            continue
        if not (reach >> s1 & 1):
            continue
        if best is None or abs(2 * s1 - total) < abs(2 * best - total):
            best = s1
    if best is None:
        return None
    chosen = []
    target = best
    for i in range(len(sizes) - 1, -1, -1):
        if prefix[i] >> target & 1:
            continue
        chosen.append(i)
        target -= sizes[i]
    chosen.reverse()
    return chosen

def _partition_from_separator(G: Graph, s_mask: int) -> Optional[SeparatorPartition]:
    """Distribute the components of G - S into balanced sides, if possible."""
    cap = balance_cap(G.n)
    comps = components_masked(G, G.full_mask & ~s_mask)
    sizes = [c.bit_count() for c in comps]
    if any(sz > cap for sz in sizes):
        return None
    chosen = _pack_two_bins(sizes, cap)
    if chosen is None:
        return None
    v1 = 0
    for i in chosen:
        v1 |= comps[i]
    v2 = G.full_mask & ~s_mask & ~v1
    return SeparatorPartition(S=tuple(bits(s_mask)), V1=tuple(bits(v1)), V2=tuple(bits(v2)))


def _exact(G: Graph) -> SeparatorPartition:
    if G.n > _EXACT_LIMIT:
        raise TooLarge(f"exact separator strategy capped at n <= {_EXACT_LIMIT}, got {G.n}")
    for k in range(G.n + 1):
        for subset in combinations(range(G.n), k):
            part = _partition_from_separator(G, mask_of(subset))
            if part is not None:
                return part
    return SeparatorPartition(S=tuple(range(G.n)), V1=(), V2=())


def _bfs_layers(G: Graph, root: int, comp: int) -> list[int]:
    layers = [1 << root]
    seen = 1 << root
    while True:
        frontier = 0
        for v in bits(layers[-1]):
            frontier |= G.adj[v]
        frontier &= comp & ~seen
        if not frontier:
            return layers
        layers.append(frontier)
        seen |= frontier


def _pseudo_peripheral(G: Graph, comp: int) -> int:
    root = (comp & -comp).bit_length() - 1
    for _ in range(2):
        layers = _bfs_layers(G, root, comp)
        root = (layers[-1] & -layers[-1]).bit_length() - 1
    return root


def _bfs_layer(G: Graph) -> SeparatorPartition:
    cap = balance_cap(G.n)
    comps = components_masked(G, G.full_mask)
    sizes = [c.bit_count() for c in comps]
    big = max(range(len(comps)), key=lambda i: sizes[i]) if comps else -1
    if big < 0 or sizes[big] <= cap:
        part = _partition_from_separator(G, 0)
        if part is not None:
            return part
    best: Optional[SeparatorPartition] = None
    if big >= 0 and sizes[big] > cap:
        comp = comps[big]
        others = [c for i, c in enumerate(comps) if i != big]
        layers = _bfs_layers(G, _pseudo_peripheral(G, comp), comp)
        for i, layer in enumerate(layers):
            below = 0
            for l in layers[:i]:
                below |= l
            above = comp & ~below & ~layer
            chunks = [c for c in (below, above) if c] + others
            chunk_sizes = [c.bit_count() for c in chunks]
            if any(sz > cap for sz in chunk_sizes):
                continue
            chosen = _pack_two_bins(chunk_sizes, cap)
            if chosen is None:
                continue
            if best is not None and layer.bit_count() >= len(best.S):
                continue
            v1 = 0
            for j in chosen:
                v1 |= chunks[j]
            v2 = G.full_mask & ~layer & ~v1
            best = SeparatorPartition(S=tuple(bits(layer)), V1=tuple(bits(v1)),
                                      V2=tuple(bits(v2)))
        if best is None and others:
            part = _partition_from_separator(G, comp)
            if part is not None:
                best = part
    if best is None:
        best = SeparatorPartition(S=tuple(range(G.n)), V1=(), V2=())
    return best


def _ffd_two_bins(sizes: Sequence[int], cap: int) -> Optional[list[int]]:
    """First-fit-decreasing into two bins; returns bin-one chunk indices."""
    order = sorted(range(len(sizes)), key=lambda i: (-sizes[i], i))
    loads = [0, 0]
    assign: list[int] = [0] * len(sizes)
    for i in order:
        if loads[0] + sizes[i] <= cap:
            loads[0] += sizes[i]
            assign[i] = 0
        elif loads[1] + sizes[i] <= cap:
            loads[1] += sizes[i]
            assign[i] = 1
        else:
            return None
    return [i for i in range(len(sizes)) if assign[i] == 0]


def _degree_peel(G: Graph) -> SeparatorPartition:
    cap = balance_cap(G.n)
    s_mask = 0
    remaining = G.full_mask
    while True:
        comps = components_masked(G, remaining)
        sizes = [c.bit_count() for c in comps]
        if all(sz <= cap for sz in sizes):
            chosen = _ffd_two_bins(sizes, cap)
            if chosen is not None:
                v1 = 0
                for i in chosen:
                    v1 |= comps[i]
                v2 = remaining & ~v1
                return SeparatorPartition(S=tuple(bits(s_mask)), V1=tuple(bits(v1)),
                                          V2=tuple(bits(v2)))
        if not remaining:
            return SeparatorPartition(S=tuple(range(G.n)), V1=(), V2=())
        peel = max(bits(remaining), key=lambda v: ((G.adj[v] & remaining).bit_count(), -v))
        s_mask |= 1 << peel
        remaining &= ~(1 << peel)


def find_balanced_separator(G: Graph, strategy: str = "auto") -> SeparatorPartition:
    if G.n < 1:
        raise ValueError("separator needs at least one vertex")
    if strategy == "exact":
        return _exact(G)
    if strategy == "bfs_layer":
        return _bfs_layer(G)
    if strategy == "degree_peel":
        return _degree_peel(G)
    if strategy == "auto":
        if G.n <= _EXACT_LIMIT:
            return _exact(G)
        a = _bfs_layer(G)
        b = _degree_peel(G)
        return a if len(a.S) <= len(b.S) else b
    raise ValueError(f"unknown separator strategy {strategy!r}")


def separator_size_survey(spec, sizes: Sequence[int], trials: int = 20,
                          strategy: str = "auto") -> list[tuple[int, float, float]]:
    """Median graph size and separator size per family size.

    Returns one row (n, median m, median |S|) per entry of sizes. Trial t of a
    size uses seed spec.seed + t, so the whole table is reproducible.
    """
    from dataclasses import replace

    from .generators import generate
    from .geometry import intersection_graph

    rows = []
    for size in sizes:
        ms = []
        seps = []
        for t in range(trials):
            family = generate(replace(spec, count=size, seed=spec.seed + t))
            G = intersection_graph(family)
            part = find_balanced_separator(G, strategy)
            validate_partition(G, part)
            ms.append(G.m)
            seps.append(len(part.S))
        rows.append((size, float(statistics.median(ms)), float(statistics.median(seps))))
    return rows


def fit_loglog_slope(pairs: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x).

    Pairs with a nonpositive coordinate are skipped; fewer than two usable
    points (or zero x-variance) give slope 0.0.
    """
    points = [(math.log(x), math.log(y)) for x, y in pairs if x > 0 and y > 0]
    if len(points) < 2:
        return 0.0
    mean_x = sum(x for x, _ in points) / len(points)
    mean_y = sum(y for _, y in points) / len(points)
    sxx = sum((x - mean_x) ** 2 for x, _ in points)
    if sxx == 0:
        return 0.0
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in points)
    return sxy / sxx
