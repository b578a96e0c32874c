"""Unigraphic and strongly unigraphic edge colorings, star colorings and
vertex covers."""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .canon import canonical_code
from .edgecolor import EdgeColoring
from .errors import GraphError, SizeBoundError
from .graph import Graph, degree_set, edge_induced_subgraph, is_connected
from .realize import colored_degree_set, iter_colored_realizations
from .recognize import _quick_invariant, degree_sequence_profile

__all__ = [
    "EdgeColoring", "BadColorClass", "NonUniqueRealization", "ColoringVerdict",
    "VertexCover", "color_subgraph", "is_unigraphic_coloring",
    "is_strongly_unigraphic_coloring", "is_star_coloring", "star_adjacency",
    "minimum_vertex_cover", "brute_force_vertex_cover", "greedy_vertex_cover",
    "star_coloring_from_vertex_cover", "strong_upper_bound",
]

# strong checks enumerate every coloured realization; exponential by design
MAX_STRONG_N = 10
MAX_STRONG_M = 28
MAX_EXACT_COVER_N = 48
MAX_BRUTE_COVER_N = 24


@dataclass(frozen=True)
class BadColorClass:
    color: int
    reason: str  # "disconnected" | "not-unigraph"


@dataclass(frozen=True)
class NonUniqueRealization:
    witness: Graph
    witness_coloring: EdgeColoring


@dataclass(frozen=True)
class ColoringVerdict:
    accepted: bool
    failure: Optional[object] = None

    def __bool__(self):
        return self.accepted


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset

    def __len__(self):
        return len(self.vertices)


def _check_host(G, c):
    if c.graph is not G and c.graph != G:
        raise GraphError("coloring belongs to a different graph")


def color_subgraph(G, c, i):
    """Edge-induced subgraph of the colour-``i`` edges."""
    _check_host(G, c)
    if not 1 <= i <= c.k:
        raise GraphError(f"colour {i} outside 1..{c.k}")
    return edge_induced_subgraph(G, c.classes()[i - 1])[0]


def is_unigraphic_coloring(G, c):
    """Accept when every colour class is a connected unigraph; otherwise
    report the least failing colour."""
    _check_host(G, c)
    for i, cls in enumerate(c.classes(), start=1):
        H = edge_induced_subgraph(G, cls)[0]
        if not is_connected(H):
            return ColoringVerdict(False, BadColorClass(i, "disconnected"))
        # unigraph-ness depends on the degree sequence only, which is cached
        if not degree_sequence_profile(degree_set(H))[0]:
            return ColoringVerdict(False, BadColorClass(i, "not-unigraph"))
    return ColoringVerdict(True)


_strong_cache = {}


def _distinct_realizations(cds, connected_only):
    """``None`` when all coloured realizations of ``cds`` share one underlying
    isomorphism class, else two realizations from different classes."""
    key = (cds, connected_only)
    if key in _strong_cache:
        return _strong_cache[key]
    first = first_inv = first_code = None
    result = None
    for H, c2 in iter_colored_realizations(cds, connected_only):
        if first is None:
            first, first_inv = (H, c2), _quick_invariant(H)
            continue
        inv = _quick_invariant(H)
        if inv != first_inv:
            result = (first, (H, c2))
            break
        if first_code is None:
            first_code = canonical_code(first[0])
        if canonical_code(H) != first_code:
            result = (first, (H, c2))
            break
    _strong_cache[key] = result
    return result


def is_strongly_unigraphic_coloring(G, c, connected_only=False):
    """Accept when c is unigraphic and every edge-coloured graph with the same
    coloured degree set has an underlying graph isomorphic to G.

    ``connected_only`` restricts the competing graphs to connected ones.
    Exhaustive: bounded by ``MAX_STRONG_N`` vertices and ``MAX_STRONG_M``
    edges.
    """
    _check_host(G, c)
    if G.n > MAX_STRONG_N:
        raise SizeBoundError("n", G.n, MAX_STRONG_N)
    if G.m > MAX_STRONG_M:
        raise SizeBoundError("m", G.m, MAX_STRONG_M)
    verdict = is_unigraphic_coloring(G, c)
    if not verdict:
        return verdict
    pair = _distinct_realizations(colored_degree_set(G, c), connected_only)
    if pair is None:
        return ColoringVerdict(True)
    code = canonical_code(G)
    for H, c2 in pair:
        if canonical_code(H) != code:
            return ColoringVerdict(False, NonUniqueRealization(H, c2))
    raise AssertionError("distinct realizations cannot both match G")


def _star_center(edges):
    if len(edges) == 1:
        return None
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    return next(iter(common)) if common else False


def is_star_coloring(G, c):
    """Every colour class is K2 or K_{1,p}."""
    _check_host(G, c)
    return all(_star_center(cls) is not False for cls in c.classes())


def star_adjacency(G, c, u, v):
    """Adjacency of u and v read off colour degrees and class sizes alone:
    some colour i has a single edge with both colour-i degrees equal to 1,
    or at least two edges with colour-i degrees {1, >=2}."""
    if not is_star_coloring(G, c):
        raise GraphError("not a star coloring")
    sizes = np.bincount(c.colors, minlength=c.k + 1)
    deg = np.zeros((G.n, c.k + 1), np.int64)
    np.add.at(deg, (G.edges[:, 0], c.colors), 1)
    np.add.at(deg, (G.edges[:, 1], c.colors), 1)
    for i in range(1, c.k + 1):
        du, dv = deg[u, i], deg[v, i]
        if sizes[i] == 1 and du == 1 and dv == 1:
            return True
        if sizes[i] >= 2 and min(du, dv) == 1 and max(du, dv) >= 2:
            return True
    return False


def _matching_bound(adj, alive):
    used, size = 0, 0
    rest = alive
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if used & low:
            continue
        nb = adj[v] & alive & ~used
        if nb:
            used |= low | (nb & -nb)
            size += 1
    return size


def _vc_branch(adj, alive, chosen, best):
    # degree-0 vertices never need covering; degree-1 forces the neighbour
    while True:
        progress = False
        rest = alive
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            nb = adj[v] & alive
            if nb == 0:
                alive &= ~low
                progress = True
            elif nb & (nb - 1) == 0:
                chosen |= nb
                alive &= ~(low | nb)
                rest &= alive
                progress = True
        if not progress:
            break
    if alive == 0:
        if chosen.bit_count() < best[0].bit_count():
            best[0] = chosen
        return
    if chosen.bit_count() + _matching_bound(adj, alive) >= best[0].bit_count():
        return
    v, dv = -1, -1
    rest = alive
    while rest:
        low = rest & -rest
        rest ^= low
        x = low.bit_length() - 1
        d = (adj[x] & alive).bit_count()
        if d > dv:
            v, dv = x, d
    nb = adj[v] & alive
    _vc_branch(adj, alive & ~(1 << v), chosen | (1 << v), best)
    _vc_branch(adj, alive & ~((1 << v) | nb), chosen | nb, best)


def greedy_vertex_cover(G):
    """Both endpoints of a maximal matching: at most twice the optimum."""
    covered = set()
    for u, v in G.edge_list:
        if u not in covered and v not in covered:
            covered.update((u, v))
    return VertexCover(frozenset(covered))


def minimum_vertex_cover(G, allow_greedy=False):
    """Exact minimum vertex cover by branch and bound (matching lower bound,
    degree-one reduction, branch on v or N(v) for a max-degree v).

    Beyond ``MAX_EXACT_COVER_N`` vertices raise, unless ``allow_greedy`` asks
    for the 2-approximation instead.
    """
    if G.n > MAX_EXACT_COVER_N:
        if allow_greedy:
            return greedy_vertex_cover(G)
        raise SizeBoundError("n", G.n, MAX_EXACT_COVER_N)
    adj = list(G.adj)
    alive = (1 << G.n) - 1
    best = [alive]
    _vc_branch(adj, alive, 0, best)
    return VertexCover(frozenset(v for v in range(G.n) if (best[0] >> v) & 1))


def brute_force_vertex_cover(G):
    """Exhaustive minimum vertex cover, n <= ``MAX_BRUTE_COVER_N``."""
    if G.n > MAX_BRUTE_COVER_N:
        raise SizeBoundError("n", G.n, MAX_BRUTE_COVER_N)
    if G.n == 0:
        return VertexCover(frozenset())
    mask = int(kernels.min_vertex_cover_mask(np.array(G.adj, dtype=np.int64)))
    return VertexCover(frozenset(v for v in range(G.n) if (mask >> v) & 1))


def _is_cover(G, S):
    return all(u in S or v in S for u, v in G.edge_list)


def star_coloring_from_vertex_cover(G, S):
    """Index cover vertices 1..k (descending degree, ties by id), the other
    vertices after them, and colour each edge by the smaller index of its
    endpoints. Each colour class is a star centred at a cover vertex."""
    S = S.vertices if isinstance(S, VertexCover) else frozenset(S)
    if not _is_cover(G, S):
        raise GraphError("vertex set is not a cover")
    deg = G.degrees
    ranked = sorted(S, key=lambda v: (-int(deg[v]), v))
    index = {v: i for i, v in enumerate(ranked, start=1)}
    big = len(ranked) + 1
    colors = [min(index.get(u, big), index.get(v, big)) for u, v in G.edge_list]
    return EdgeColoring(G, colors)


def strong_upper_bound(G):
    """``(tau(G), star coloring from a minimum cover)``."""
    cover = minimum_vertex_cover(G)
    c = star_coloring_from_vertex_cover(G, cover)
    return len(cover), c
