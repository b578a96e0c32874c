"""Simple undirected graphs on dense vertex ids 0..n-1."""
import math
from functools import cached_property

import numpy as np

from . import kernels
from .errors import GraphError


class Graph:
    """Immutable simple graph.

    Edges are stored as an ``(m, 2)`` int64 array with ``u < v`` rows sorted
    lexicographically; that row order is the canonical edge order used for
    edge indices, colorings and bitmasks throughout the package.
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n, edges):
        n = int(n)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        arr = np.asarray(edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.zeros((0, 2), np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise GraphError("edges must be a sequence of (u, v) pairs")
        bad = (arr < 0) | (arr >= n)
        if bad.any():
            u, v = arr[np.nonzero(bad.any(axis=1))[0][0]]
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            u, v = arr[np.nonzero(loops)[0][0]]
            raise GraphError(f"self-loop ({u}, {v})")
        arr = np.sort(arr, axis=1)
        keys = arr[:, 0] * max(n, 1) + arr[:, 1]
        order = np.argsort(keys, kind="stable")
        arr, keys = arr[order], keys[order]
        dup = np.nonzero(keys[1:] == keys[:-1])[0]
        if dup.size:
            u, v = arr[dup[0]]
            raise GraphError(f"duplicate edge ({u}, {v})")
        arr.setflags(write=False)
        self.n = n
        self.edges = arr

    @property
    def m(self):
        return int(self.edges.shape[0])

    @cached_property
    def edge_list(self):
        return [(int(u), int(v)) for u, v in self.edges]

    @cached_property
    def edge_index(self):
        return {e: i for i, e in enumerate(self.edge_list)}

    @cached_property
    def degrees(self):
        deg = np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)
        deg.setflags(write=False)
        return deg

    @cached_property
    def adj(self):
        """Neighbourhood bitmasks (python ints), one per vertex."""
        rows = [0] * self.n
        for u, v in self.edge_list:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @cached_property
    def neighbors(self):
        out = [[] for _ in range(self.n)]
        for u, v in self.edge_list:
            out[u].append(v)
            out[v].append(u)
        return out

    def adjacency_matrix(self):
        a = np.zeros((self.n, self.n), np.uint8)
        a[self.edges[:, 0], self.edges[:, 1]] = 1
        a[self.edges[:, 1], self.edges[:, 0]] = 1
        return a

    def csr(self):
        """``(indptr, indices, edge_ids)`` adjacency arrays."""
        return kernels.csr_from_edges(self.n, self.edges[:, 0].copy(), self.edges[:, 1].copy())

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1) if 0 <= u < self.n and 0 <= v < self.n else False

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges.tobytes()))

    def __repr__(self):
        if self.m <= 12:
            return f"Graph(n={self.n}, edges={self.edge_list})"
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n, edges):
    return Graph(n, list(edges))


def from_adjacency_masks(rows):
    n = len(rows)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if (rows[u] >> v) & 1])


def degree_set(G):
    """Degree multiset as a descending tuple."""
    return tuple(int(d) for d in np.sort(G.degrees)[::-1])


def vertex_induced_subgraph(G, U):
    """Subgraph induced by ``U``; returns ``(H, mapping)`` where ``mapping[i]``
    is the vertex of G relabelled to i (ascending order)."""
    U = sorted(set(int(u) for u in U))
    for u in U:
        if not 0 <= u < G.n:
            raise GraphError(f"vertex {u} outside [0, {G.n})")
    pos = {u: i for i, u in enumerate(U)}
    edges = [(pos[u], pos[v]) for u, v in G.edge_list if u in pos and v in pos]
    return Graph(len(U), edges), tuple(U)


def edge_induced_subgraph(G, F):
    """Subgraph formed by the edge set ``F`` and its endpoints; returns
    ``(H, mapping)`` like :func:`vertex_induced_subgraph`."""
    F = [tuple(sorted((int(u), int(v)))) for u, v in F]
    for e in F:
        if e not in G.edge_index:
            raise GraphError(f"edge {e} is not in the graph")
    verts = sorted({x for e in F for x in e})
    pos = {u: i for i, u in enumerate(verts)}
    return Graph(len(verts), [(pos[u], pos[v]) for u, v in F]), tuple(verts)


def edge_mask_subgraph(G, mask):
    """Edge-induced subgraph for a bitmask over edge indices (no mapping)."""
    F = [e for i, e in enumerate(G.edge_list) if (mask >> i) & 1]
    return edge_induced_subgraph(G, F)[0]


def components(G):
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = [False] * G.n
    out = []
    nbrs = G.neighbors
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(G):
    # empty and single-vertex graphs count as connected
    return G.n <= 1 or len(components(G)) == 1


def distance_matrix(G):
    """All-pairs BFS distances, -1 for unreachable pairs."""
    return kernels.all_pairs_distances(G.adjacency_matrix())


def diameter(G):
    """Largest shortest-path distance; ``math.inf`` for disconnected graphs."""
    if G.n <= 1:
        return 0
    dist = distance_matrix(G)
    if (dist < 0).any():
        return math.inf
    return int(dist.max())


def contains_induced_p5(G):
    """``(True, vertices)`` for some 5-set inducing a path with four edges,
    else ``(False, None)``."""
    if G.n < 5:
        return False, None
    w = kernels.induced_p5(G.adjacency_matrix())
    if w[0] < 0:
        return False, None
    return True, tuple(int(x) for x in w)


def is_tree(G):
    return G.n >= 1 and G.m == G.n - 1 and is_connected(G)


def relabel(G, perm):
    """Image of G under the vertex map ``v -> perm[v]``."""
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edge_list])


def disjoint_union(*graphs):
    edges, off = [], 0
    for H in graphs:
        edges.extend((u + off, v + off) for u, v in H.edge_list)
        off += H.n
    return Graph(off, edges)


def complement(G):
    full = (1 << G.n) - 1
    return from_adjacency_masks([full & ~G.adj[v] & ~(1 << v) for v in range(G.n)])
