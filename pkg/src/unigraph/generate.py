"""Named graphs, exhaustive small-graph generators and random trees."""
from functools import lru_cache

import numpy as np

from .canon import canonical_form
from .graph import Graph, from_adjacency_masks, is_connected


def domino():
    """The 2x3 grid: rows 0-1-2 and 3-4-5 joined by rungs 03, 14, 25."""
    return Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])


def empty(n):
    return Graph(n, [])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(p):
    """K_{1,p} with centre 0."""
    return Graph(p + 1, [(0, i) for i in range(1, p + 1)])


def double_star(q, r):
    """S_{q,r}: centres 0 and 1 joined, with q and r leaves respectively."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(q)]
    edges += [(1, 2 + q + i) for i in range(r)]
    return Graph(q + r + 2, edges)


def spider(legs, length):
    edges, nxt = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph(nxt, edges)


def _canonical_graph(rows):
    n = len(rows)
    code, order = canonical_form(n, (rows,))
    pos = {v: i for i, v in enumerate(order)}
    canon = [0] * n
    for v in range(n):
        r = 0
        for w in range(n):
            if (rows[v] >> w) & 1:
                r |= 1 << pos[w]
        canon[pos[v]] = r
    return code, tuple(canon)


@lru_cache(maxsize=None)
def _graph_rows(n):
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    seen = {}
    for rows in _graph_rows(n - 1):
        for nb in range(1 << (n - 1)):
            ext = [r | (((nb >> v) & 1) << (n - 1)) for v, r in enumerate(rows)] + [nb]
            code, canon = _canonical_graph(ext)
            if code not in seen:
                seen[code] = canon
    return tuple(seen[c] for c in sorted(seen))


def all_graphs(n, connected=False):
    """Every graph on n vertices up to isomorphism, in canonical-code order."""
    for rows in _graph_rows(n):
        G = from_adjacency_masks(list(rows))
        if not connected or is_connected(G):
            yield G


@lru_cache(maxsize=None)
def _tree_rows(n):
    if n == 1:
        return ((0,),)
    seen = {}
    for rows in _tree_rows(n - 1):
        for v in range(n - 1):
            ext = list(rows) + [1 << v]
            ext[v] |= 1 << (n - 1)
            code, canon = _canonical_graph(ext)
            if code not in seen:
                seen[code] = canon
    return tuple(seen[c] for c in sorted(seen))


def all_trees(n):
    """Every tree on n >= 1 vertices up to isomorphism."""
    for rows in _tree_rows(n):
        yield from_adjacency_masks(list(rows))


def random_tree(n, rng):
    """Uniform labelled tree on n vertices via a Pruefer sequence."""
    if n <= 1:
        return Graph(n, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2)
    degree = np.ones(n, np.int64)
    np.add.at(degree, seq, 1)
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, int(x))
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_recursive_tree(n, rng):
    """Each vertex i >= 1 attaches to a uniform earlier vertex, then labels
    are shuffled. Linear time; used for the large scaling runs."""
    if n <= 1:
        return Graph(n, [])
    parent = (rng.random(n - 1) * np.arange(1, n)).astype(np.int64)
    perm = rng.permutation(n)
    return Graph(n, np.stack([perm[np.arange(1, n)], perm[parent]], axis=1))


def random_graph(n, p, rng):
    iu = np.triu_indices(n, 1)
    keep = rng.random(iu[0].size) < p
    return Graph(n, np.stack([iu[0][keep], iu[1][keep]], axis=1))
