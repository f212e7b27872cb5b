"""Constructive extraction procedures with certified witnesses.

Each operation returns an ExtractionWitness whose claimed property is
re-verified against the input graph before returning; the tunable constants
only influence guaranteed sizes, never correctness. All recursions work on
vertex bitmasks of the original graph, so witnesses stay in original indices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import (ExtractorViolation, InternalBoundViolation, NoCoverFound,
                     PreconditionViolated, RefinementFailed)
from .graph import (Coloring, Graph, average_degree, bits, clique_in_mask,
                    components_masked, edges_in_mask, find_clique, greedy_color,
                    induced_subgraph, mask_of, validate_coloring)
from .separator import find_balanced_separator


@dataclass(frozen=True)
class AlgorithmParams:
    """Tunable constants for the extraction recursions.

    None of the defaults are forced by theory; c is conventionally tied to the
    others (c = c_dblprime * c_prime / 30) but any positive value is accepted
    and no relation is enforced. delta, when None, is derived from epsilon by
    color_or_clique.
    """

    c1: float = 2.0
    c2: float = 1.0
    c: float = 0.01
    c_prime: float = 0.01
    c_dblprime: float = 0.05
    epsilon: float = 0.5
    delta: Optional[float] = None
    separator_strategy: str = "auto"

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "c", "c_prime", "c_dblprime"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if not (0 < self.epsilon < 1):
            raise ValueError("epsilon must lie in (0, 1)")
        if self.delta is not None and self.delta <= 0:
            raise ValueError("delta must be strictly positive when given")

    def C_refine(self, epsilon: float) -> float:
        return max((12 * self.c1) ** 2, 4 * self.c1 ** 2 / epsilon ** 2)


DEFAULT_PARAMS = AlgorithmParams()

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class ExtractionWitness:
    kind: str
    vertices: Union[VertexSet, tuple[VertexSet, ...]]
    certificate: dict


@dataclass(frozen=True)
class MultipartiteCover:
    parts: tuple[VertexSet, ...]
    alpha: float

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def p(self) -> int:
        return self.t.bit_length() - 1


# ---------------------------------------------------------------------------
# Size floors. All logs are base 2 and every floor is clamped to at least 1.

def cover_floor(n: int, c: float) -> float:
    if n < 2:
        return 1.0
    return max(1.0, c * n / math.log2(n) ** 2)


def half_clique_floor(n: int, c: float) -> float:
    if n < 2:
        return 1.0
    return max(1.0, c * n / math.log2(n) ** 3)


def independent_floor(n: int, s: int, c: float) -> int:
    if n < 2:
        return 1
    return max(1, math.floor(n * (c * s / math.log2(n)) ** (2 * s - 2)))


def q_independent_floor(n: int, s: int, q: int, c: float) -> int:
    if n < 2:
        return 1
    frac = (c * (s + 1 - q) / math.log2(n)) ** (2 * s - 2 * q)
    return max(1, math.floor(n * frac / 2 ** (2 * s)))


# ---------------------------------------------------------------------------
# Witness validation. Every checker is exact; failures raise
# ExtractorViolation with a description of the broken property.

def _as_apex_map(raw) -> dict[int, int]:
    items = raw.items() if isinstance(raw, dict) else raw
    return {int(k): int(v) for k, v in items}


def _check_clique(G: Graph, vertices: Iterable[int]) -> None:
    m = mask_of(vertices)
    for v in bits(m):
        if (G.adj[v] & m) != m & ~(1 << v):
            raise ExtractorViolation(f"vertices are not pairwise adjacent at {v}")


def _check_kp_free(G: Graph, vertices: Iterable[int], p: int) -> None:
    clique = clique_in_mask(G, mask_of(vertices), p)
    if clique is not None:
        raise ExtractorViolation(f"claimed K_{p}-free set contains clique {clique}")


def validate_multipartite_cover(G: Graph, cover: MultipartiteCover,
                                c_dblprime: float) -> None:
    if cover.t < 2:
        raise ExtractorViolation("cover needs at least two parts")
    if cover.t & (cover.t - 1):
        raise ExtractorViolation("part count must be a power of two")
    masks = [mask_of(part) for part in cover.parts]
    seen = 0
    for m in masks:
        if m & seen:
            raise ExtractorViolation("parts are not disjoint")
        seen |= m
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            for v in bits(masks[i]):
                if (G.adj[v] & masks[j]) != masks[j]:
                    raise ExtractorViolation(
                        f"vertex {v} of part {i} is not complete to part {j}")
    threshold = c_dblprime * cover.alpha * G.n / cover.t ** 2
    smallest = min(len(part) for part in cover.parts)
    if smallest < threshold:
        raise ExtractorViolation(
            f"smallest part has {smallest} vertices, below threshold {threshold}")


def validate_witness(G: Graph, witness: ExtractionWitness) -> None:
    kind = witness.kind
    cert = witness.certificate
    if kind == "independent":
        m = mask_of(witness.vertices)
        for v in bits(m):
            if G.adj[v] & m:
                raise ExtractorViolation(f"vertex {v} has a neighbor inside the set")
    elif kind in ("q_independent", "kp_free"):
        _check_kp_free(G, witness.vertices, int(cert["p"]))
    elif kind == "neighborhood_cover":
        _check_cover(G, witness.vertices, cert)
    elif kind == "dense_core":
        _check_dense_core(G, witness.vertices, cert)
    elif kind == "multipartite":
        cover = MultipartiteCover(parts=tuple(tuple(p) for p in witness.vertices),
                                  alpha=float(cert["alpha"]))
        validate_multipartite_cover(G, cover, float(cert["c_dblprime"]))
    elif kind == "coloring":
        validate_coloring(G, Coloring(tuple(tuple(c) for c in witness.vertices)))
    elif kind == "clique":
        _check_clique(G, witness.vertices)
    else:
        raise ExtractorViolation(f"unknown witness kind {kind!r}")


def _check_cover(G: Graph, vertices: Iterable[int], cert: dict) -> None:
    wmask = mask_of(vertices)
    apexes = _as_apex_map(cert.get("apexes", {}))
    for comp in components_masked(G, wmask):
        if comp.bit_count() == 1:
            continue
        key = (comp & -comp).bit_length() - 1
        if key not in apexes:
            raise ExtractorViolation(f"component at vertex {key} has no recorded apex")
        apex = apexes[key]
        if (G.adj[apex] & comp) != comp:
            raise ExtractorViolation(
                f"apex {apex} is not adjacent to all of its component at {key}")


def _check_dense_core(G: Graph, vertices: Iterable[int], cert: dict) -> None:
    core = mask_of(vertices)
    size = core.bit_count()
    if size == 0:
        raise ExtractorViolation("dense core is empty")
    d = average_degree(G)
    d_prime = Fraction(2 * edges_in_mask(G, core), size)
    eps = Fraction(float(cert["epsilon"]))
    C = Fraction(float(cert["C"]))
    if d_prime < (1 - eps) * d:
        raise ExtractorViolation(
            f"core average degree {d_prime} below (1-eps)*{d}")
    if Fraction(size) > max(Fraction(1), C * d_prime):
        raise ExtractorViolation(
            f"core has {size} vertices, above the C*d' bound")


# ---------------------------------------------------------------------------
# Shared plumbing.

def _subgraph(G: Graph, mask: int) -> tuple[Graph, list[int]]:
    vs = list(bits(mask))
    return induced_subgraph(G, vs), vs


def _split_by_separator(G: Graph, mask: int, params: AlgorithmParams
                        ) -> tuple[int, int, int]:
    """Separator of G[mask]; returns (S, V1, V2) as masks in original indices."""
    H, vs = _subgraph(G, mask)
    part = find_balanced_separator(H, params.separator_strategy)
    s_mask = mask_of(vs[i] for i in part.S)
    v1 = mask_of(vs[i] for i in part.V1)
    v2 = mask_of(vs[i] for i in part.V2)
    return s_mask, v1, v2


def _verify_no_clique(G: Graph, r: int) -> None:
    clique = find_clique(G, r)
    if clique is not None:
        raise PreconditionViolated(
            f"input graph contains K_{r}",
            witness=ExtractionWitness("clique", clique, {"size": r}))


# ---------------------------------------------------------------------------
# Neighborhood covers and K_{r-1}-free subgraphs.

def _cover_rec(G: Graph, mask: int, params: AlgorithmParams
               ) -> tuple[int, dict[int, int]]:
    nm = mask.bit_count()
    if nm == 0:
        return 0, {}
    if nm == 1:
        return mask, {}
    threshold = max(1.0, params.c * nm / math.log2(nm) ** 2)
    hub = max(bits(mask), key=lambda v: ((G.adj[v] & mask).bit_count(), -v))
    if (G.adj[hub] & mask).bit_count() >= threshold:
        w = G.adj[hub] & mask
        apexes = {}
        for comp in components_masked(G, w):
            if comp.bit_count() >= 2:
                apexes[(comp & -comp).bit_length() - 1] = hub
        return w, apexes
    _, v1, v2 = _split_by_separator(G, mask, params)
    w1, a1 = _cover_rec(G, v1, params)
    w2, a2 = _cover_rec(G, v2, params)
    w = w1 | w2
    if w == 0:
        return mask & -mask, {}
    a1.update(a2)
    return w, a1


def neighborhood_cover_subgraph(G: Graph,
                                params: Optional[AlgorithmParams] = None
                                ) -> ExtractionWitness:
    """Vertex set W where every component of G[W] lies in some vertex's
    neighborhood or is a singleton."""
    params = params or DEFAULT_PARAMS
    if G.n < 1:
        raise ValueError("need at least one vertex")
    w, apexes = _cover_rec(G, G.full_mask, params)
    witness = ExtractionWitness(
        "neighborhood_cover", tuple(bits(w)),
        {"apexes": apexes, "bound": cover_floor(G.n, params.c), "c": params.c})
    validate_witness(G, witness)
    return witness


def kr1_free_subgraph(G: Graph, r: int,
                      params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    """K_{r-1}-free induced subgraph of a K_r-free graph, via the apex
    argument: a clique in a covered component would extend by its apex."""
    params = params or DEFAULT_PARAMS
    if r < 3:
        raise ValueError("forbidden clique size r must be at least 3")
    _verify_no_clique(G, r)
    w, apexes = _cover_rec(G, G.full_mask, params)
    if clique_in_mask(G, w, r - 1) is not None:
        raise ExtractorViolation("cover output unexpectedly contains K_{r-1}")
    witness = ExtractionWitness(
        "kp_free", tuple(bits(w)),
        {"p": r - 1, "apexes": apexes, "source": "neighborhood_cover",
         "bound": cover_floor(G.n, params.c)})
    validate_witness(G, witness)
    return witness


# ---------------------------------------------------------------------------
# Balanced bicliques.

def _biclique_exact(G: Graph, t_min: int
                    ) -> Optional[tuple[VertexSet, VertexSet]]:
    n = G.n
    adj = G.adj
    best_t = 0
    best = (0, 0)

    def dfs(idx: int, amask: int, common: int) -> None:
        nonlocal best_t, best
        bcand = common & ~amask
        t_here = min(amask.bit_count(), bcand.bit_count())
        if t_here > best_t:
            best_t, best = t_here, (amask, bcand)
        if idx == n:
            return
        if min(amask.bit_count() + n - idx, bcand.bit_count()) <= best_t:
            return
        dfs(idx + 1, amask | (1 << idx), common & adj[idx])
        dfs(idx + 1, amask, common)

    dfs(0, 0, G.full_mask)
    if best_t < t_min:
        return None
    side_a = tuple(bits(best[0]))[:best_t]
    side_b = tuple(bits(best[1]))[:best_t]
    return side_a, side_b


def _biclique_grow(adj: tuple[int, ...], u: int, v: int) -> tuple[int, int]:
    amask = 1 << u
    bmask = 1 << v
    cand_a = adj[v] & ~amask & ~bmask
    cand_b = adj[u] & ~amask & ~bmask
    while cand_a or cand_b:
        grow_a = amask.bit_count() <= bmask.bit_count()
        if grow_a and not cand_a:
            grow_a = False
        if not grow_a and not cand_b:
            grow_a = True
        if grow_a:
            x = max(bits(cand_a), key=lambda w: ((adj[w] & cand_b).bit_count(), -w))
            amask |= 1 << x
            cand_b &= adj[x]
        else:
            x = max(bits(cand_b), key=lambda w: ((adj[w] & cand_a).bit_count(), -w))
            bmask |= 1 << x
            cand_a &= adj[x]
        cand_a &= ~(1 << x)
        cand_b &= ~(1 << x)
    return amask, bmask


def _biclique_greedy(G: Graph, t_min: int
                     ) -> Optional[tuple[VertexSet, VertexSet]]:
    adj = G.adj
    seeds = G.edges()
    if len(seeds) > 120:
        step = len(seeds) // 120
        seeds = seeds[::step]
    best_t = 0
    best = (0, 0)
    for u, v in seeds:
        amask, bmask = _biclique_grow(adj, u, v)
        t = min(amask.bit_count(), bmask.bit_count())
        if t > best_t:
            best_t, best = t, (amask, bmask)
    if best_t < t_min:
        return None
    side_a = tuple(bits(best[0]))[:best_t]
    side_b = tuple(bits(best[1]))[:best_t]
    return side_a, side_b


def find_balanced_biclique(G: Graph, t_min: int, mode: str = "auto"
                           ) -> Optional[tuple[VertexSet, VertexSet]]:
    """Disjoint A, B with |A| = |B| >= t_min and A complete to B.

    Exact search (None certifies nonexistence) for n <= 20 under auto, greedy
    seed-edge completion beyond; greedy None is not a nonexistence proof.
    """
    if t_min < 1:
        raise ValueError("t_min must be at least 1")
    if mode == "auto":
        mode = "exact" if G.n <= 20 else "greedy"
    if mode == "exact":
        return _biclique_exact(G, t_min)
    if mode == "greedy":
        return _biclique_greedy(G, t_min)
    raise ValueError(f"unknown biclique mode {mode!r}")


# ---------------------------------------------------------------------------
# Half-clique-free subgraphs: dense graphs yield a balanced biclique one of
# whose sides must avoid K_{ceil(r/2)}; sparse graphs recurse by separator.

def half_clique_free_subgraph(G: Graph, r: int,
                              params: Optional[AlgorithmParams] = None
                              ) -> ExtractionWitness:
    params = params or DEFAULT_PARAMS
    if r < 3:
        raise ValueError("forbidden clique size r must be at least 3")
    _verify_no_clique(G, r)
    p_half = (r + 1) // 2

    def rec(mask: int) -> int:
        nm = mask.bit_count()
        if nm == 0:
            return 0
        if nm == 1:
            return mask
        logn = math.log2(nm)
        if edges_in_mask(G, mask) >= params.c * params.c2 * nm * nm / logn ** 2:
            t_target = max(1, math.ceil(params.c * nm / logn ** 3))
            H, vs = _subgraph(G, mask)
            found = find_balanced_biclique(H, t_target)
            if found is not None:
                a_mask = mask_of(vs[i] for i in found[0])
                b_mask = mask_of(vs[i] for i in found[1])
                clique_a = clique_in_mask(G, a_mask, p_half)
                if clique_a is None:
                    return a_mask
                clique_b = clique_in_mask(G, b_mask, p_half)
                if clique_b is None:
                    return b_mask
                assembled = tuple(sorted(clique_a + clique_b))
                raise PreconditionViolated(
                    f"both biclique sides contain K_{p_half}; assembled K_{len(assembled)}",
                    witness=ExtractionWitness("clique", assembled,
                                              {"size": len(assembled)}))
        _, v1, v2 = _split_by_separator(G, mask, params)
        w = rec(v1) | rec(v2)
        if w == 0:
            return mask & -mask
        return w

    w = rec(G.full_mask)
    if clique_in_mask(G, w, p_half) is not None:
        raise ExtractorViolation("output unexpectedly contains the forbidden clique")
    witness = ExtractionWitness(
        "kp_free", tuple(bits(w)),
        {"p": p_half, "source": "balanced_biclique",
         "bound": half_clique_floor(G.n, params.c)})
    validate_witness(G, witness)
    return witness


# ---------------------------------------------------------------------------
# Dense cores.

def dense_core(G: Graph, epsilon: float,
               params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    """Subset V' with average degree d' >= (1-eps)*d and |V'| <= max(1, C*d')."""
    params = params or DEFAULT_PARAMS
    if not (0 < epsilon < 1):
        raise ValueError("epsilon must lie in (0, 1)")
    if G.n < 1:
        raise ValueError("need at least one vertex")
    C = Fraction(params.C_refine(epsilon))
    d_full = average_degree(G)
    mask = G.full_mask
    while True:
        nm = mask.bit_count()
        d_i = Fraction(2 * edges_in_mask(G, mask), nm)
        if nm == 1 or d_i >= Fraction(nm) / C:
            break
        s_mask, v1, v2 = _split_by_separator(G, mask, params)
        side1 = v1 | s_mask
        side2 = v2 | s_mask

        def avg(side: int) -> Fraction:
            if not side:
                return Fraction(-1)
            return Fraction(2 * edges_in_mask(G, side), side.bit_count())

        chosen = side1 if avg(side1) >= avg(side2) else side2
        if chosen == mask:
            chosen = side2 if chosen == side1 else side1
        if not chosen or chosen == mask:
            raise RefinementFailed("separator produced no strictly smaller side")
        mask = chosen
    size = mask.bit_count()
    d_prime = Fraction(2 * edges_in_mask(G, mask), size)
    eps = Fraction(epsilon)
    if d_prime < (1 - eps) * d_full:
        raise RefinementFailed(
            f"core density {float(d_prime):.4f} fell below (1-eps)*d = "
            f"{float((1 - eps) * d_full):.4f}; retry with strategy=exact or larger C")
    if Fraction(size) > max(Fraction(1), C * d_prime):
        raise RefinementFailed(f"core size {size} exceeds C*d'")
    witness = ExtractionWitness(
        "dense_core", tuple(bits(mask)),
        {"epsilon": epsilon, "C": float(C), "d": d_full, "d_prime": d_prime})
    validate_witness(G, witness)
    return witness


# ---------------------------------------------------------------------------
# Complete multipartite covers, built on the complement graph: vertices in
# different complement components are pairwise adjacent in G.

def multipartite_cover(G: Graph, alpha: float,
                       params: Optional[AlgorithmParams] = None) -> MultipartiteCover:
    params = params or DEFAULT_PARAMS
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    n = G.n
    if n < 2:
        raise ValueError("need at least two vertices")
    if G.m < alpha * n * n:
        raise PreconditionViolated(
            f"graph has {G.m} edges, below the alpha*n^2 = {alpha * n * n:.2f} floor")
    full = G.full_mask
    hadj = tuple((full & ~a & ~(1 << v)) for v, a in enumerate(G.adj))
    H = Graph(G.labels, hadj)
    work = full
    while True:
        comps = components_masked(H, work)
        if len(comps) >= 2:
            break
        if work.bit_count() <= 1:
            raise NoCoverFound("complement peeling exhausted the vertex set")
        peel = max(bits(work), key=lambda v: ((hadj[v] & work).bit_count(), -v))
        work &= ~(1 << peel)
    k = len(comps)
    ordered = sorted(comps, key=lambda c: (-c.bit_count(), c & -c))
    for p in range(1, k.bit_length()):
        t = 1 << p
        groups = [0] * t
        loads = [0] * t
        for comp in ordered:
            g = min(range(t), key=lambda i: (loads[i], i))
            groups[g] |= comp
            loads[g] += comp.bit_count()
        threshold = params.c_dblprime * alpha * n / t ** 2
        if min(loads) >= max(1, threshold):
            cover = MultipartiteCover(
                parts=tuple(tuple(bits(g)) for g in groups), alpha=alpha)
            validate_multipartite_cover(G, cover, params.c_dblprime)
            return cover
    raise NoCoverFound("no power-of-two grouping met the part-size threshold")


def _merge_groups(cover: MultipartiteCover) -> MultipartiteCover:
    merged = []
    for i in range(0, cover.t, 2):
        merged.append(tuple(sorted(cover.parts[i] + cover.parts[i + 1])))
    return MultipartiteCover(parts=tuple(merged), alpha=cover.alpha)


# ---------------------------------------------------------------------------
# Independent and K_{2^q}-free ("2^q-independent") sets by double induction:
# sparse graphs split by separator, dense graphs split by multipartite cover
# into parts, one of which must avoid the next forbidden clique size.

def _bigger(a: Optional[VertexSet], b: Optional[VertexSet]) -> Optional[VertexSet]:
    if a is None:
        return b
    if b is None or len(b) < len(a):
        return a
    return b


def _qindep_rec(G: Graph, mask: int, s: int, q: int, params: AlgorithmParams,
                events: list) -> tuple[int, Optional[VertexSet]]:
    """G[mask] must be K_{2^s}-free (certified by the caller)."""
    nm = mask.bit_count()
    if nm == 0:
        return 0, None
    if s == q:
        return mask, None
    if nm <= 10:
        # Base case: keep everything when the block is already clique-free.
        if clique_in_mask(G, mask, 2 ** q) is None:
            return mask, None
        return mask & -mask, None
    logn = math.log2(nm)
    alpha = params.c_prime * ((s + 1 - q) / logn) ** 2
    best_clique: Optional[VertexSet] = None
    if edges_in_mask(G, mask) > alpha * nm * nm:
        H, vs = _subgraph(G, mask)
        try:
            cover = multipartite_cover(H, alpha, params)
        except NoCoverFound:
            events.append(nm)
            cover = None
        if cover is not None:
            while cover.p >= s and cover.t > 2:
                cover = _merge_groups(cover)
            if cover.p >= s:
                raise InternalBoundViolation(
                    "cover part count contradicts the clique-free certificate")
            p = cover.p
            target = s - p
            chosen_sub: Optional[int] = None
            part_cliques: list[VertexSet] = []
            for part in cover.parts:
                part_mask = mask_of(part)
                clique = clique_in_mask(H, part_mask, 2 ** target)
                if clique is None and chosen_sub is None:
                    chosen_sub = part_mask
                elif clique is not None:
                    part_cliques.append(clique)
            if part_cliques:
                assembled = tuple(sorted(vs[i] for cl in part_cliques for i in cl))
                best_clique = _bigger(best_clique, assembled)
            if chosen_sub is None:
                raise InternalBoundViolation(
                    "every cover part contains the forbidden clique")
            chosen = mask_of(vs[i] for i in bits(chosen_sub))
            if target <= q:
                return chosen, best_clique
            res, child_clique = _qindep_rec(G, chosen, target, q, params, events)
            return res, _bigger(best_clique, child_clique)
    _, v1, v2 = _split_by_separator(G, mask, params)
    r1, c1 = _qindep_rec(G, v1, s, q, params, events)
    r2, c2 = _qindep_rec(G, v2, s, q, params, events)
    res = r1 | r2
    if res == 0:
        res = mask & -mask
    return res, _bigger(best_clique, _bigger(c1, c2))


def independent_set(G: Graph, s: int,
                    params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    params = params or DEFAULT_PARAMS
    if s < 1:
        raise ValueError("s must be at least 1")
    if G.n < 1:
        raise ValueError("need at least one vertex")
    _verify_no_clique(G, 2 ** s)
    if G.m == 0:
        res: int = G.full_mask
        fallbacks = 0
        found: Optional[VertexSet] = None
    else:
        events: list = []
        res, found = _qindep_rec(G, G.full_mask, s, 1, params, events)
        fallbacks = len(events)
    witness = ExtractionWitness(
        "independent", tuple(bits(res)),
        {"s": s, "floor": independent_floor(G.n, s, params.c),
         "fallbacks": fallbacks, "found_clique": found})
    validate_witness(G, witness)
    return witness


def q_independent_set(G: Graph, s: int, q: int,
                      params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    params = params or DEFAULT_PARAMS
    if q < 1 or s < q:
        raise ValueError("need s >= q >= 1")
    if G.n < 1:
        raise ValueError("need at least one vertex")
    _verify_no_clique(G, 2 ** s)
    if find_clique(G, 2 ** q) is None:
        # Already free of the target clique: the whole vertex set qualifies.
        res: int = G.full_mask
        fallbacks = 0
        found: Optional[VertexSet] = None
    else:
        events: list = []
        res, found = _qindep_rec(G, G.full_mask, s, q, params, events)
        fallbacks = len(events)
    witness = ExtractionWitness(
        "q_independent", tuple(bits(res)),
        {"s": s, "q": q, "p": 2 ** q,
         "floor": q_independent_floor(G.n, s, q, params.c),
         "fallbacks": fallbacks, "found_clique": found})
    validate_witness(G, witness)
    return witness


# ---------------------------------------------------------------------------
# Color-or-clique dichotomy.

class _CliqueFound(Exception):
    def __init__(self, vertices: VertexSet) -> None:
        super().__init__(f"clique of size {len(vertices)}")
        self.vertices = vertices


def choose_delta(epsilon: float, c: float) -> float:
    """Largest delta with 2*delta*log2(1/(c*delta)) < epsilon/2 and
    x < 2^(epsilon*x/2) for every x >= 1/delta."""
    if not (0 < epsilon < 1):
        raise ValueError("epsilon must lie in (0, 1)")

    def ok(d: float) -> bool:
        if d <= 0:
            return True
        if c * d >= 1:
            return False
        if 2 * d * math.log2(1 / (c * d)) >= epsilon / 2:
            return False
        x0 = 1 / d
        if x0 < 2 / (epsilon * math.log(2)):
            return False
        return epsilon * x0 / 2 > math.log2(x0)

    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = (lo + hi) / 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo if lo > 0 else 1e-9


def color_or_clique(G: Graph, epsilon: float,
                    params: Optional[AlgorithmParams] = None) -> ExtractionWitness:
    """Either a proper coloring with at most n^epsilon classes or a clique of
    size at least n^delta; the achieved branch is verified before returning."""
    params = params or DEFAULT_PARAMS
    if not (0 < epsilon < 1):
        raise ValueError("epsilon must lie in (0, 1)")
    n = G.n
    if n < 1:
        raise ValueError("need at least one vertex")
    delta = params.delta if params.delta is not None else choose_delta(epsilon, params.c)
    s = max(1, math.ceil(delta * math.log2(n))) if n >= 2 else 1
    clique_threshold = n ** delta

    def extractor(remaining: VertexSet) -> VertexSet:
        H = induced_subgraph(G, remaining)
        try:
            w = independent_set(H, s, params)
        except PreconditionViolated as exc:
            verts = exc.witness.vertices if exc.witness is not None else ()
            raise _CliqueFound(tuple(sorted(remaining[i] for i in verts)))
        found = w.certificate.get("found_clique")
        if found and len(found) >= clique_threshold:
            raise _CliqueFound(tuple(sorted(remaining[i] for i in found)))
        return tuple(remaining[i] for i in w.vertices)

    try:
        coloring = greedy_color(G, extractor)
    except _CliqueFound as exc:
        _check_clique(G, exc.vertices)
        if len(exc.vertices) < clique_threshold:
            raise InternalBoundViolation(
                f"clique of size {len(exc.vertices)} below n^delta = {clique_threshold}")
        return ExtractionWitness(
            "clique", exc.vertices,
            {"epsilon": epsilon, "delta": delta, "s": s,
             "threshold": clique_threshold, "size": len(exc.vertices)})
    if coloring.num_colors > n ** epsilon:
        raise InternalBoundViolation(
            f"{coloring.num_colors} color classes exceed n^epsilon = {n ** epsilon:.2f}")
    validate_coloring(G, coloring)
    return ExtractionWitness(
        "coloring", coloring.classes,
        {"epsilon": epsilon, "delta": delta, "s": s,
         "num_colors": coloring.num_colors})
