"""Unigraph numbers of trees through edge domination.

For a tree, a k-unigraphic coloring and an edge dominating set of size k
convert into each other, so the unigraph number is the edge domination
number, which a rooted three-state dynamic program finds in linear time.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .edgecolor import EdgeColoring
from .errors import GraphError, SizeBoundError

MAX_BRUTE_EDS_M = 24


@dataclass(frozen=True)
class EdgeDominatingSet:
    edges: tuple  # ordered; the order fixes colour indices in the coloring

    def __len__(self):
        return len(self.edges)


def _require_tree(T):
    # connectivity is certified by the BFS kernel
    if T.n == 0 or T.m != T.n - 1:
        raise GraphError("input is not a tree")


def _edge_indices(G, edges):
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    arr = np.sort(arr, axis=1)
    keys = G.edges[:, 0] * max(G.n, 1) + G.edges[:, 1]
    want = arr[:, 0] * max(G.n, 1) + arr[:, 1]
    idx = np.searchsorted(keys, want)
    if idx.size and (np.any(idx >= G.m) or np.any(keys[np.minimum(idx, G.m - 1)] != want)):
        raise GraphError("edge set contains a non-edge")
    return idx


def is_edge_dominating(G, edges):
    idx = _edge_indices(G, edges)
    touched = np.zeros(G.n, bool)
    touched[G.edges[idx, 0]] = True
    touched[G.edges[idx, 1]] = True
    return bool(np.all(touched[G.edges[:, 0]] | touched[G.edges[:, 1]]))


def min_edge_dominating_set_tree(T):
    """Minimum edge dominating set of a tree in O(n)."""
    _require_tree(T)
    if T.m == 0:
        return EdgeDominatingSet(())
    idx = _dp_indices(T)
    E = T.edges
    return EdgeDominatingSet(tuple(zip(E[idx, 0].tolist(), E[idx, 1].tolist())))


def _dp_indices(T):
    E = T.edges
    order, ppos, pedge, count = kernels.tree_bfs(T.n, E[:, 0].copy(), E[:, 1].copy())
    if count != T.n:
        raise GraphError("input is not a tree")
    size, chosen = kernels.tree_edge_domination(ppos, pedge, T.m)
    idx = np.nonzero(chosen)[0]
    assert idx.size == size
    return idx


def edge_domination_number_tree(T):
    return len(min_edge_dominating_set_tree(T))


def brute_force_min_edge_dominating_set(G):
    """Exact minimum edge dominating set of any graph by subset enumeration."""
    if G.m > MAX_BRUTE_EDS_M:
        raise SizeBoundError("m", G.m, MAX_BRUTE_EDS_M)
    if G.m == 0:
        return EdgeDominatingSet(())
    mask = int(kernels.min_edge_dominating_mask(G.edges[:, 0].copy(), G.edges[:, 1].copy()))
    return EdgeDominatingSet(tuple(e for i, e in enumerate(G.edge_list) if (mask >> i) & 1))


def coloring_from_edge_dominating_set(T, eds):
    """Colour the i-th dominating edge i; every other edge takes the least
    colour among dominating edges it touches."""
    edges = eds.edges if isinstance(eds, EdgeDominatingSet) else tuple(eds)
    if not is_edge_dominating(T, edges):
        raise GraphError("edge set is not dominating")
    if T.m == 0:
        return EdgeColoring(T, [])
    return _coloring_from_indices(T, _edge_indices(T, edges))


def _coloring_from_indices(T, idx):
    colors = kernels.dominated_colors(T.n, T.edges[:, 0], T.edges[:, 1], np.asarray(idx, np.int64))
    return EdgeColoring(T, colors)


def edge_dominating_set_from_coloring(T, c):
    """One edge per colour class: the edge of a K2, the least edge of a star,
    the centre edge of a double star."""
    from .coloring import is_unigraphic_coloring

    _require_tree(T)
    if not is_unigraphic_coloring(T, c):
        raise GraphError("coloring is not unigraphic")
    out = []
    for cls in c.classes():
        if len(cls) == 1:
            out.append(cls[0])
            continue
        deg = {}
        for u, v in cls:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        inner = [e for e in cls if deg[e[0]] > 1 and deg[e[1]] > 1]
        out.append(inner[0] if inner else min(cls))
    return EdgeDominatingSet(tuple(out))


def tree_unigraph_number(T):
    """``(w(T), unigraphic coloring with w(T) colours)`` in linear time."""
    _require_tree(T)
    if T.m == 0:
        return 0, EdgeColoring(T, [])
    idx = _dp_indices(T)
    return int(idx.size), _coloring_from_indices(T, idx)
