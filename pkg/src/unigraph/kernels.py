"""Hot numeric kernels.

Every kernel is written once as plain python over numpy arrays and compiled
with numba when available (see ``unigraph._accel``). Where a vectorised numpy
formulation exists it is used as the fallback instead of the interpreted loop;
``BACKEND`` reports which path is live.

Bitmask conventions: vertex sets and edge sets are int64 masks, so every
kernel that takes masks requires ``n <= 62`` / ``m <= 62``; callers enforce
much tighter bounds.
"""
import numpy as np

from ._accel import USING_NUMBA, njit

BACKEND = "numba" if USING_NUMBA else "numpy"

# "unreachable"; two capped values still sum below 2**31
INF32 = np.int32(1 << 29)

# numpy fallbacks process masks in blocks of this many rows
_CHUNK = 1 << 15


@njit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


# ---------------------------------------------------------------- induced P5

def _induced_p5_loop(adj):
    n = adj.shape[0]
    out = -np.ones(5, np.int64)
    idx = np.zeros(5, np.int64)
    nb = np.zeros(5, np.int64)
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    for e in range(d + 1, n):
                        idx[0] = a
                        idx[1] = b
                        idx[2] = c
                        idx[3] = d
                        idx[4] = e
                        m = 0
                        ok = True
                        for i in range(5):
                            nb[i] = 0
                            deg = 0
                            for j in range(5):
                                if adj[idx[i], idx[j]]:
                                    nb[i] |= 1 << j
                                    deg += 1
                            if deg == 0 or deg > 2:
                                ok = False
                                break
                            m += deg
                        if not ok or m != 8:
                            continue
                        # 4 edges, degrees in {1, 2}: a path unless triangle + K2
                        reach = 1
                        frontier = 1
                        while frontier:
                            nxt = 0
                            for i in range(5):
                                if (frontier >> i) & 1:
                                    nxt |= nb[i]
                            frontier = nxt & ~reach
                            reach |= nxt
                        if reach == 31:
                            for i in range(5):
                                out[i] = idx[i]
                            return out
    return out


induced_p5 = njit(_induced_p5_loop)


# ----------------------------------------------------- all-pairs distances

def _apsp_loop(adj):
    n = adj.shape[0]
    dist = -np.ones((n, n), np.int64)
    queue = np.zeros(n, np.int64)
    for s in range(n):
        dist[s, s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            for v in range(n):
                if adj[u, v] and dist[s, v] < 0:
                    dist[s, v] = dist[s, u] + 1
                    queue[tail] = v
                    tail += 1
    return dist


def _apsp_numpy(adj):
    n = adj.shape[0]
    a = adj.astype(bool)
    dist = np.where(np.eye(n, dtype=bool), 0, -1).astype(np.int64)
    reach = np.eye(n, dtype=bool)
    for step in range(1, n):
        nxt = reach | ((reach.astype(np.int64) @ a.astype(np.int64)) > 0)
        new = nxt & ~reach
        if not new.any():
            break
        dist[new] = step
        reach = nxt
    return dist


all_pairs_distances = njit(_apsp_loop) if USING_NUMBA else _apsp_numpy


# ------------------------------------------------- edge-subset profiles

def _profiles_loop(eu, ev, n):
    m = eu.shape[0]
    total = 1 << m
    conn = np.zeros(total, np.uint8)
    key = np.zeros(total, np.int64)
    deg = np.zeros(n, np.int64)
    nb = np.zeros(n, np.int64)
    for mask in range(1, total):
        for v in range(n):
            deg[v] = 0
            nb[v] = 0
        vmask = 0
        for e in range(m):
            if (mask >> e) & 1:
                u = eu[e]
                w = ev[e]
                deg[u] += 1
                deg[w] += 1
                nb[u] |= 1 << w
                nb[w] |= 1 << u
                vmask |= (1 << u) | (1 << w)
        k = 0
        for v in range(n):
            if deg[v] > 0:
                k += 1 << (4 * (deg[v] - 1))
        key[mask] = k
        reach = vmask & -vmask
        frontier = reach
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            v = 0
            while (low >> v) != 1:
                v += 1
            new = nb[v] & ~reach
            reach |= new
            frontier |= new
        if reach == vmask:
            conn[mask] = 1
    return conn, key


def _profiles_numpy(eu, ev, n):
    m = eu.shape[0]
    total = 1 << m
    conn = np.zeros(total, np.uint8)
    key = np.zeros(total, np.int64)
    inc = np.zeros((m, n), np.int64)
    inc[np.arange(m), eu] = 1
    inc[np.arange(m), ev] = 1
    shifts = np.arange(m, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        deg = bits @ inc
        present = deg > 0
        weights = np.where(present, np.left_shift(np.int64(1), 4 * np.maximum(deg - 1, 0)), 0)
        key[masks] = weights.sum(axis=1)
        nb = np.zeros((masks.size, n), np.int64)
        for e in range(m):
            u, w = int(eu[e]), int(ev[e])
            nb[:, u] |= bits[:, e] << w
            nb[:, w] |= bits[:, e] << u
        vmask = (present.astype(np.int64) << np.arange(n, dtype=np.int64)).sum(axis=1)
        reach = vmask & -vmask
        for _ in range(n):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> v) & 1 == 1, nb[:, v], 0)
            reach = grown
        conn[masks] = (reach == vmask) & (masks != 0)
    return conn, key


# For every edge subset (bitmask over edge indices): is its edge-induced
# subgraph connected, plus a degree-multiset key. The key packs the number of
# vertices of degree d >= 1 into the 4-bit digit d-1, so n <= 15.
edge_subset_profiles = njit(_profiles_loop) if USING_NUMBA else _profiles_numpy


def decode_degree_key(key):
    """Descending degree sequence (without zeros) encoded by a profile key."""
    out = []
    d = 1
    key = int(key)
    while key:
        out.extend([d] * (key & 15))
        key >>= 4
        d += 1
    return tuple(sorted(out, reverse=True))


# ------------------------------------------------ class-partition search

@njit
def partition_feasible(valid, lb, mask, k):
    """Can ``mask`` be split into at most ``k`` subsets each flagged ``valid``?

    ``lb`` memoises proven lower bounds per mask (int8, zero-initialised) and
    may be shared across calls on the same ``valid`` table. Each branch
    places the lowest remaining edge, so colour permutations are never
    revisited.
    """
    if mask == 0:
        return True
    if k <= 0:
        return False
    if lb[mask] > k:
        return False
    if valid[mask]:
        return True
    if k == 1:
        lb[mask] = 2
        return False
    low = mask & -mask
    rest = mask ^ low
    sub = rest
    while True:
        a = sub | low
        if a != mask and valid[a]:
            if partition_feasible(valid, lb, mask ^ a, k - 1):
                return True
        if sub == 0:
            break
        sub = (sub - 1) & rest
    if lb[mask] < k + 1:
        lb[mask] = k + 1
    return False


@njit
def partition_choices(valid, lb, mask, k):
    """All valid classes containing the lowest edge of ``mask`` whose removal
    leaves a remainder splittable into ``k - 1`` valid classes, largest first."""
    low = mask & -mask
    rest = mask ^ low
    out = np.empty(1 << _popcount(rest), np.int64)
    cnt = 0
    sub = rest
    while True:
        a = sub | low
        if valid[a] and partition_feasible(valid, lb, mask ^ a, k - 1):
            out[cnt] = a
            cnt += 1
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return out[:cnt]


# ------------------------------------------------ brute-force oracles

def _vc_loop(nbr):
    n = nbr.shape[0]
    best = (1 << n) - 1
    best_size = n
    for mask in range((1 << n) - 1, -1, -1):
        size = _popcount(mask)
        if size >= best_size:
            continue
        ok = True
        for v in range(n):
            if not (mask >> v) & 1 and (nbr[v] & ~mask) != 0:
                ok = False
                break
        if ok:
            best = mask
            best_size = size
    return best


def _vc_numpy(nbr):
    n = nbr.shape[0]
    total = 1 << n
    best, best_size = total - 1, n
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        ok = np.ones(masks.size, bool)
        for v in range(n):
            inside = ((masks >> v) & 1) == 1
            ok &= inside | ((int(nbr[v]) & ~masks) == 0)
        if not ok.any():
            continue
        cand = masks[ok]
        sizes = np.array([bin(int(x)).count("1") for x in cand])
        # the loop kernels keep the numerically largest minimum mask
        i = int(np.nonzero(sizes == sizes.min())[0][-1])
        if sizes[i] < best_size or (sizes[i] == best_size and cand[i] > best):
            best, best_size = int(cand[i]), int(sizes[i])
    return best


# exhaustive minimum vertex cover; nbr[v] is the neighbourhood mask of v
min_vertex_cover_mask = njit(_vc_loop) if USING_NUMBA else _vc_numpy


def _eds_loop(eu, ev):
    m = eu.shape[0]
    best = (1 << m) - 1
    best_size = m
    for mask in range((1 << m) - 1, -1, -1):
        size = _popcount(mask)
        if size >= best_size:
            continue
        vs = 0
        for e in range(m):
            if (mask >> e) & 1:
                vs |= (1 << eu[e]) | (1 << ev[e])
        ok = True
        for e in range(m):
            if (vs & ((1 << eu[e]) | (1 << ev[e]))) == 0:
                ok = False
                break
        if ok:
            best = mask
            best_size = size
    return best


def _eds_numpy(eu, ev):
    m = eu.shape[0]
    total = 1 << m
    ends = (np.int64(1) << eu.astype(np.int64)) | (np.int64(1) << ev.astype(np.int64))
    shifts = np.arange(m, dtype=np.int64)
    best, best_size = total - 1, m
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        bits = (masks[:, None] >> shifts) & 1
        vs = np.bitwise_or.reduce(bits * ends, axis=1)
        ok = np.all((vs[:, None] & ends) != 0, axis=1)
        if not ok.any():
            continue
        sizes = bits[ok].sum(axis=1)
        cand = masks[ok]
        # the loop kernels keep the numerically largest minimum mask
        i = int(np.nonzero(sizes == sizes.min())[0][-1])
        if sizes[i] < best_size or (sizes[i] == best_size and cand[i] > best):
            best, best_size = int(cand[i]), int(sizes[i])
    return best


min_edge_dominating_mask = njit(_eds_loop) if USING_NUMBA else _eds_numpy


# ------------------------------------------------ trees

def _tree_bfs_loop(n, eu, ev):
    """BFS from vertex 0 over a tree given by its edge arrays.

    Returns ``(order, ppos, pedge, count, sink)`` indexed by BFS position:
    ``order[i]`` is the vertex, ``ppos[i]`` the position of its parent (-1
    for the root) and ``pedge[i]`` the id of the edge to it. ``count < n``
    means the edges do not form a tree. ``sink`` only keeps the look-ahead
    loads alive.

    Only the parent is skipped when expanding a vertex, so there is no
    visited array; a cycle makes the queue overflow instead.
    """
    m = eu.shape[0]
    ptr = np.zeros(n + 1, np.int32)
    for e in range(m):
        ptr[eu[e]] += 1
        ptr[ev[e]] += 1
    acc = 0
    for v in range(n):
        acc += ptr[v]
        ptr[v] = acc
    ptr[n] = acc
    # (neighbour, edge id) pairs; filled backwards so ptr ends as run starts
    # and each vertex still lists its edges in edge order
    adj = np.empty((2 * m, 2), np.int32)
    for e in range(m - 1, -1, -1):
        u = eu[e]
        w = ev[e]
        ptr[u] -= 1
        adj[ptr[u], 0] = w
        adj[ptr[u], 1] = e
        ptr[w] -= 1
        adj[ptr[w], 0] = u
        adj[ptr[w], 1] = e
    order = np.empty(n, np.int32)
    ppos = np.empty(n, np.int32)
    pedge = np.empty(n, np.int32)
    sink = 0
    if n == 0:
        return order, ppos, pedge, 0, sink
    order[0] = 0
    ppos[0] = -1
    pedge[0] = -1
    tail = 1
    for i in range(n):
        if i >= tail:
            return order, ppos, pedge, tail, sink
        # touch queued vertices a few steps ahead so their misses overlap
        if i + 16 < tail:
            sink += ptr[order[i + 16]]
        if i + 8 < tail:
            sink += adj[ptr[order[i + 8]], 0]
        u = order[i]
        up = -1 if i == 0 else order[ppos[i]]
        for j in range(ptr[u], ptr[u + 1]):
            w = adj[j, 0]
            if w == up:
                continue
            if tail == n:
                return order, ppos, pedge, -1, sink
            order[tail] = w
            ppos[tail] = i
            pedge[tail] = adj[j, 1]
            tail += 1
    return order, ppos, pedge, tail, sink


_tree_bfs = njit(_tree_bfs_loop)


def tree_bfs(n, eu, ev):
    """``(order, ppos, pedge, count)``; see ``_tree_bfs_loop``."""
    return _tree_bfs(n, eu, ev)[:4]


def _tree_eds_loop(ppos, pedge, m):
    """Minimum edge dominating set of a tree in BFS layout (see
    ``tree_bfs``); position 0 is the root and ``ppos[i] < i``.

    States per vertex v over the edges of its subtree:
      A: v is an endpoint of a chosen edge below it, every edge dominated;
      B: v untouched, every edge dominated;
      C: v untouched, some child edges wait for the parent edge.
    Rows of ``st`` hold (A, B, C, S, gap, forced) for one position.
    """
    n = ppos.shape[0]
    st = np.zeros((n, 6), np.int32)
    for v in range(n):
        st[v, 4] = INF32
        st[v, 5] = -1
    for v in range(n - 1, -1, -1):
        a = min(st[v, 3] + st[v, 4], INF32)
        st[v, 0] = a
        # B and C were accumulated from the children; leaves keep zero
        p = ppos[v]
        if p < 0:
            continue
        x = 1 + min(a, st[v, 2])
        y = a
        z = st[v, 1]
        best = min(x, min(y, z))
        st[p, 3] = min(st[p, 3] + best, INF32)
        if x - best < st[p, 4]:
            st[p, 4] = x - best
            st[p, 5] = v
        st[p, 1] = min(st[p, 1] + y, INF32)
        st[p, 2] = min(st[p, 2] + min(y, z), INF32)

    chosen = np.zeros(m, np.uint8)
    state = np.zeros(n, np.uint8)
    root = 0
    state[root] = 0 if st[root, 0] <= st[root, 1] else 1
    for v in range(1, n):
        p = ppos[v]
        s = state[p]
        x = 1 + min(st[v, 0], st[v, 2])
        y = st[v, 0]
        z = st[v, 1]
        if s == 0:
            if st[p, 5] == v:
                opt = 0
            elif y <= x and y <= z:
                opt = 1
            elif z <= x:
                opt = 2
            else:
                opt = 0
        elif s == 1:
            opt = 1
        else:
            opt = 1 if y <= z else 2
        if opt == 0:
            chosen[pedge[v]] = 1
            state[v] = 0 if st[v, 0] <= st[v, 2] else 2
        elif opt == 1:
            state[v] = 0
        else:
            state[v] = 1
    return min(st[root, 0], st[root, 1]), chosen


tree_edge_domination = njit(_tree_eds_loop)


def _csr_loop(n, eu, ev):
    m = eu.shape[0]
    indptr = np.zeros(n + 1, np.int64)
    for e in range(m):
        indptr[eu[e] + 1] += 1
        indptr[ev[e] + 1] += 1
    for v in range(n):
        indptr[v + 1] += indptr[v]
    fill = indptr[:n].copy()
    indices = np.empty(2 * m, np.int32)
    edge_ids = np.empty(2 * m, np.int32)
    for e in range(m):
        u = eu[e]
        w = ev[e]
        indices[fill[u]] = w
        edge_ids[fill[u]] = e
        fill[u] += 1
        indices[fill[w]] = u
        edge_ids[fill[w]] = e
        fill[w] += 1
    return indptr, indices, edge_ids


def _csr_numpy(n, eu, ev):
    m = eu.shape[0]
    # interleaved so each vertex lists its edges in edge order, as the loop does
    src = np.stack([eu, ev], axis=1).ravel()
    dst = np.stack([ev, eu], axis=1).ravel()
    eid = np.repeat(np.arange(m), 2)
    order = np.argsort(src, kind="stable")
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order].astype(np.int32), eid[order].astype(np.int32)


# adjacency arrays (indptr, neighbours, edge ids); counting sort, O(n + m)
csr_from_edges = njit(_csr_loop) if USING_NUMBA else _csr_numpy


def _dominated_colors_loop(n, eu, ev, idx):
    k = idx.shape[0]
    best = np.full(n, k + 1, np.int64)
    for r in range(k):
        e = idx[r]
        if r + 1 < best[eu[e]]:
            best[eu[e]] = r + 1
        if r + 1 < best[ev[e]]:
            best[ev[e]] = r + 1
    m = eu.shape[0]
    colors = np.empty(m, np.int64)
    for e in range(m):
        colors[e] = min(best[eu[e]], best[ev[e]])
    for r in range(k):
        colors[idx[r]] = r + 1
    return colors


def _dominated_colors_numpy(n, eu, ev, idx):
    k = idx.shape[0]
    best = np.full(n, k + 1, np.int64)
    ranks = np.arange(1, k + 1, dtype=np.int64)
    np.minimum.at(best, eu[idx], ranks)
    np.minimum.at(best, ev[idx], ranks)
    colors = np.minimum(best[eu], best[ev])
    colors[idx] = ranks
    return colors


# colour i for the i-th dominating edge, least touching dominator elsewhere
dominated_colors = njit(_dominated_colors_loop) if USING_NUMBA else _dominated_colors_numpy
