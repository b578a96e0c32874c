"""Realizations of degree sets and coloured degree sets.

Both enumerators share one generator. Vertices are processed in a fixed
order; when vertex i is processed all of its remaining edges go to later
vertices. Later vertices are kept in classes of vertices that are still
interchangeable (same remaining colour demands, same adjacency to the
processed prefix), and the generator only decides how many members of each
class receive an edge of each colour, always taking a class's leading
members. This skips all relabellings inside a class; the few isomorphic
duplicates that remain are removed with canonical codes.
"""
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .canon import MAX_CANON_N, canonical_code, colored_canonical_code
from .edgecolor import EdgeColoring
from .errors import GraphError, SizeBoundError
from .graph import Graph, is_connected

MAX_REALIZE_N = MAX_CANON_N


def is_graphical(ds):
    """Erdos-Gallai test."""
    d = sorted((int(x) for x in ds), reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    if d and d[0] > n - 1:
        return False
    total = 0
    for r in range(1, n + 1):
        total += d[r - 1]
        if total > r * (r - 1) + sum(min(x, r) for x in d[r:]):
            return False
    return True


def havel_hakimi(ds):
    """One realization of a graphical sequence; vertex v gets degree ds[v]."""
    rem = [int(x) for x in ds]
    edges = []
    live = list(range(len(rem)))
    while True:
        live.sort(key=lambda v: (-rem[v], v))
        v = live[0] if live else None
        if v is None or rem[v] == 0:
            break
        live.pop(0)
        d, rem[v] = rem[v], 0
        if d > len(live):
            raise GraphError(f"degree sequence {tuple(ds)} is not graphical")
        for w in live[:d]:
            if rem[w] == 0:
                raise GraphError(f"degree sequence {tuple(ds)} is not graphical")
            rem[w] -= 1
            edges.append((v, w))
    if any(rem):
        raise GraphError(f"degree sequence {tuple(ds)} is not graphical")
    return Graph(len(ds), edges)


@dataclass(frozen=True)
class ColoredDegreeSet:
    """Multiset of per-vertex colour-degree tuples, stored descending."""

    tuples: tuple
    k: int

    def __post_init__(self):
        tuples = tuple(sorted((tuple(int(x) for x in t) for t in self.tuples), reverse=True))
        for t in tuples:
            if len(t) != self.k:
                raise GraphError(f"tuple {t} does not have {self.k} entries")
            if any(x < 0 for x in t):
                raise GraphError(f"negative colour degree in {t}")
        object.__setattr__(self, "tuples", tuples)

    @property
    def n(self):
        return len(self.tuples)

    def degree_set(self):
        return tuple(sorted((sum(t) for t in self.tuples), reverse=True))

    def color_degree_set(self, j):
        """Degree multiset of colour ``j`` (1-based), zeros included."""
        return tuple(sorted((t[j - 1] for t in self.tuples), reverse=True))

    def canonical_key(self):
        """Key invariant under permuting colours."""
        if self.k > 6:
            return (self.k, self.tuples)
        best = None
        for perm in permutations(range(self.k)):
            key = tuple(sorted((tuple(t[p] for p in perm) for t in self.tuples), reverse=True))
            if best is None or key < best:
                best = key
        return (self.k, best)


def colored_degree_set(G, coloring):
    if coloring.graph is not G and coloring.graph != G:
        raise GraphError("coloring belongs to a different graph")
    k = coloring.k
    rows = [[0] * k for _ in range(G.n)]
    for (u, v), c in zip(G.edge_list, coloring.colors.tolist()):
        rows[u][c - 1] += 1
        rows[v][c - 1] += 1
    return ColoredDegreeSet(tuple(tuple(r) for r in rows), k)


def vertex_colored_degrees(G, coloring):
    """Per-vertex colour-degree tuples (not sorted)."""
    k = coloring.k
    rows = [[0] * k for _ in range(G.n)]
    for (u, v), c in zip(G.edge_list, coloring.colors.tolist()):
        rows[u][c - 1] += 1
        rows[v][c - 1] += 1
    return [tuple(r) for r in rows]


def _realize(tuples, k):
    """Yield edge lists ``[(u, v, colour), ...]`` over vertices 0..n-1 such
    that vertex v has colour-degree tuple ``tuples[v]``."""
    n = len(tuples)
    for j in range(k):
        if sum(t[j] for t in tuples) % 2:
            return
    order = sorted(range(n), key=lambda v: (sum(tuples[v]), tuples[v]), reverse=True)
    rem = [list(tuples[v]) for v in order]
    edges = []

    runs = []
    for i in range(n):
        if runs and rem[runs[-1][0]] == rem[i]:
            runs[-1][1] = i + 1
        else:
            runs.append([i, i + 1])
    runs = [tuple(r) for r in runs]

    def process(i, classes):
        if i == n:
            yield list(edges)
            return
        need = rem[i]
        start, end = classes[0]
        later = ([(start + 1, end)] if end > start + 1 else []) + classes[1:]
        if not any(need):
            yield from process(i + 1, later)
            return
        # capacity[c][j]: vertices in later[c:] that can still take colour j
        cap = [[0] * k for _ in range(len(later) + 1)]
        for c in range(len(later) - 1, -1, -1):
            s, e = later[c]
            r = rem[s]
            for j in range(k):
                cap[c][j] = cap[c + 1][j] + ((e - s) if r[j] > 0 else 0)
        if any(cap[0][j] < need[j] for j in range(k)):
            return
        if sum(need) > cap_total(later):
            return
        picks = [None] * len(later)
        yield from distribute(i, later, 0, list(need), cap, picks)

    def cap_total(later):
        return sum(e - s for s, e in later if any(rem[s]))

    def distribute(i, later, c, need, cap, picks):
        if c == len(later):
            if any(need):
                return
            yield from apply(i, later, picks)
            return
        for j in range(k):
            if cap[c][j] < need[j]:
                return
        s, e = later[c]
        size = e - s
        r = rem[s]

        def choose(j, left, vec):
            if j == k:
                picks[c] = tuple(vec)
                yield from distribute(i, later, c + 1, need, cap, picks)
                return
            hi = min(need[j], left) if r[j] > 0 else 0
            # the rest of colour j must fit in later classes
            lo = max(0, need[j] - cap[c + 1][j])
            for x in range(hi, lo - 1, -1):
                need[j] -= x
                vec.append(x)
                yield from choose(j + 1, left - x, vec)
                vec.pop()
                need[j] += x

        yield from choose(0, size, [])

    def apply(i, later, picks):
        new_classes = []
        added = 0
        for (s, e), vec in zip(later, picks):
            p = s
            for j, x in enumerate(vec):
                for t in range(p, p + x):
                    rem[t][j] -= 1
                    edges.append((i, t, j + 1))
                    added += 1
                if x:
                    new_classes.append((p, p + x))
                p += x
            if p < e:
                new_classes.append((p, e))
        # in place: outer frames hold references to these rows
        saved = rem[i][:]
        rem[i][:] = [0] * k
        yield from process(i + 1, new_classes)
        rem[i][:] = saved
        for _ in range(added):
            a, t, col = edges.pop()
            rem[t][col - 1] += 1

    if n == 0:
        yield []
        return
    for pos_edges in process(0, runs):
        yield [(min(order[a], order[b]), max(order[a], order[b]), c) for a, b, c in pos_edges]


def _check_size(n):
    if n > MAX_REALIZE_N:
        raise SizeBoundError("n", n, MAX_REALIZE_N)


def iter_realizations(ds, connected_only=False):
    """Lazily yield realizations of ``ds`` (vertex v gets degree ``ds[v]``);
    may repeat isomorphism classes."""
    _check_size(len(ds))
    n = len(ds)
    for edges in _realize([(int(d),) for d in ds], 1):
        H = Graph(n, [(u, v) for u, v, _ in edges])
        if not connected_only or is_connected(H):
            yield H


def enumerate_realizations(ds, connected_only=False):
    """Every isomorphism class of simple graphs with degree set ``ds``
    exactly once, ordered by canonical code."""
    ds = tuple(sorted((int(d) for d in ds), reverse=True))
    if not is_graphical(ds):
        raise GraphError(f"degree set {ds} is not graphical")
    found = {}
    for H in iter_realizations(ds, connected_only):
        found.setdefault(canonical_code(H), H)
    for code in sorted(found):
        yield found[code]


def iter_colored_realizations(cds, connected_only=False):
    """Lazily yield ``(H, coloring)`` pairs realizing ``cds``; may repeat
    colour-preserving isomorphism classes."""
    _check_size(cds.n)
    n = cds.n
    for edges in _realize(cds.tuples, cds.k):
        H = Graph(n, [(u, v) for u, v, _ in edges])
        if connected_only and not is_connected(H):
            continue
        colors = [0] * H.m
        for u, v, c in edges:
            colors[H.edge_index[(u, v)]] = c
        yield H, _exact_coloring(H, colors, cds.k)


def _exact_coloring(H, colors, k):
    # keep colour labels aligned with the tuple positions even when a colour
    # class is empty, so the realization reproduces cds column for column
    c = EdgeColoring.__new__(EdgeColoring)
    arr = np.asarray(colors, dtype=np.int64)
    arr.setflags(write=False)
    c.graph, c.colors, c.k = H, arr, k
    return c


def enumerate_colored_realizations(cds, connected_only=False):
    """Every colour-preserving isomorphism class of edge-coloured simple
    graphs with coloured degree set ``cds`` exactly once, ordered by coloured
    canonical code. Infeasible input gives an empty stream."""
    found = {}
    for H, c in iter_colored_realizations(cds, connected_only):
        found.setdefault(colored_canonical_code(H, c.colors, cds.k), (H, c))
    for code in sorted(found):
        yield found[code]
