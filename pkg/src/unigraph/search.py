"""Exact unigraph numbers by search over edge-set partitions.

Every subset F of E(G) is profiled once: connected or not, and the degree
multiset of the edge-induced subgraph G[F]. Whether G[F] is a connected
unigraph depends on that multiset alone (a unigraphic sequence has one
realization up to isomorphism), so a per-sequence cache turns the profiles
into a table of admissible colour classes. The search then partitions E(G)
into admissible classes, with the lowest uncoloured edge opening each new
class, for k = 1, 2, ... until a partition exists.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from . import kernels
from .coloring import is_strongly_unigraphic_coloring, is_unigraphic_coloring, strong_upper_bound
from .edgecolor import EdgeColoring
from .errors import GraphError, SizeBoundError
from .graph import components, is_connected, is_tree, vertex_induced_subgraph
from .realize import colored_degree_set, havel_hakimi
from .recognize import MAX_ORACLE_N, degree_sequence_profile, fast_filter, is_unigraph
from .trees import tree_unigraph_number

MAX_W_M = 24
MAX_S_M = 16
MAX_S_N = 10
MAX_EXHAUSTIVE_M = 9
WORKERS_ENV = "UNIGRAPH_WORKERS"


def default_workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Bound:
    value: int
    source: str  # "trivial" | "vertex-cover" | "tree-lemma" | "search"
    applies_to: str = "w,s"  # which numbers it bounds: "w", "s" or "w,s"
    witness: Optional[EdgeColoring] = None


@dataclass
class DecompositionReport:
    w: Optional[int] = None
    w_witness: Optional[EdgeColoring] = None
    s: Optional[int] = None
    s_witness: Optional[EdgeColoring] = None
    lower_bounds: list = field(default_factory=list)
    upper_bounds: list = field(default_factory=list)
    notices: list = field(default_factory=list)

    def lower(self, which="w"):
        return max((b.value for b in self.lower_bounds if which in b.applies_to), default=0)

    def upper(self, which="w"):
        return min((b.value for b in self.upper_bounds if which in b.applies_to), default=None)


def _require_connected(G):
    if not is_connected(G):
        raise GraphError("graph is not connected; classes must be connected, "
                         "use component_unigraph_number")


@lru_cache(maxsize=None)
def _connected_class_ok(ds):
    # ds comes from a connected edge set, so a disconnected realization
    # means two classes; otherwise refute cheaply before the oracle
    if len(ds) <= MAX_ORACLE_N:
        return degree_sequence_profile(ds)[0]
    H = havel_hakimi(ds)
    if not is_connected(H) or fast_filter(H, first_only=True):
        return False
    return is_unigraph(H).is_unigraph  # raises: beyond the oracle bound


def valid_class_table(G):
    """uint8 table over edge bitmasks: 1 when the edges induce a connected
    unigraph (the empty set is never valid)."""
    if G.m > MAX_W_M:
        raise SizeBoundError("m", G.m, MAX_W_M)
    eu = G.edges[:, 0].copy()
    ev = G.edges[:, 1].copy()
    conn, key = kernels.edge_subset_profiles(eu, ev, G.n)
    conn[0] = 0
    keys, inverse = np.unique(key, return_inverse=True)
    inverse = inverse.reshape(-1)
    wanted = np.zeros(keys.size, bool)
    wanted[inverse[conn == 1]] = True
    ok = np.zeros(keys.size, np.uint8)
    for i in np.nonzero(wanted)[0].tolist():
        ok[i] = _connected_class_ok(kernels.decode_degree_key(int(keys[i])))
    return (ok[inverse] & conn).astype(np.uint8)


def _rev_bits(mask, m):
    return int(format(mask, f"0{m}b")[::-1], 2)


class _Partitioner:
    """Shared table plus the lower-bound memo of the partition search."""

    def __init__(self, G, valid=None):
        self.G = G
        self.m = G.m
        self.full = (1 << G.m) - 1
        self.valid = valid_class_table(G) if valid is None else valid
        self.lb = np.zeros(self.valid.shape[0], np.int8)

    def feasible(self, mask, k):
        return bool(kernels.partition_feasible(self.valid, self.lb, mask, k))

    def _verts(self, a):
        idx = [i for i in range(self.m) if (a >> i) & 1]
        return len(set(self.G.edges[idx].ravel().tolist()))

    def choices(self, mask, k):
        """Admissible first classes, preferred first: more edges, then fewer
        vertices, then the lexicographically smaller colour vector."""
        out = kernels.partition_choices(self.valid, self.lb, mask, k).tolist()
        return sorted(out, key=lambda a: (-bin(a).count("1"), self._verts(a),
                                          -_rev_bits(a, self.m)))

    def least(self, mask, k):
        # greedy on the preference order; deterministic for a fixed edge order
        parts = []
        while mask:
            a = self.choices(mask, k)[0]
            parts.append(a)
            mask ^= a
            k -= 1
        return parts

    def partitions(self, mask, k, exact):
        """All partitions of ``mask`` into at most (exactly, when ``exact``)
        ``k`` admissible classes, in preference order."""
        if mask == 0:
            if not exact or k == 0:
                yield []
            return
        if k == 0 or (exact and self.m and bin(mask).count("1") < k):
            return
        for a in self.choices(mask, k):
            for rest in self.partitions(mask ^ a, k - 1, exact):
                yield [a] + rest


def unigraph_number(G):
    """``(w(G), witness)``: the least k with a k-unigraphic coloring.

    Connected graphs with at most ``MAX_W_M`` edges. The witness is built
    class by class from the lowest uncoloured edge, preferring large classes
    on few vertices, then the lexicographically smaller colour vector.
    """
    _require_connected(G)
    if G.m > MAX_W_M:
        raise SizeBoundError("m", G.m, MAX_W_M)
    if G.m == 0:
        return 0, EdgeColoring(G, [])
    part = _Partitioner(G)
    k = 1
    while not part.feasible(part.full, k):
        k += 1
    return k, EdgeColoring.from_masks(G, part.least(part.full, k))


def _strong_scan(G, valid, k, first, connected_only):
    # worker entry point: strong-check the partitions under one first class
    part = _Partitioner(G, valid)
    seen = {}
    for rest in part.partitions(part.full ^ first, k - 1, True):
        c = EdgeColoring.from_masks(G, [first] + rest)
        key = colored_degree_set(G, c).canonical_key()
        if key not in seen:
            seen[key] = bool(is_strongly_unigraphic_coloring(G, c, connected_only))
        if seen[key]:
            return [first] + rest
    return None


def strong_unigraph_number(G, connected_only=False, workers=None, start=None):
    """``(s(G), witness)``: the least k with a k-strongly-unigraphic coloring.

    Starts at w(G) (or ``start``) and strong-checks every exactly-k partition
    into admissible classes, caching verdicts per coloured degree set up to
    colour permutation. ``workers`` > 1 spreads the first-class branches
    over processes; the reported witness is the first in preference order
    either way.
    """
    _require_connected(G)
    if G.m > MAX_S_M:
        raise SizeBoundError("m", G.m, MAX_S_M)
    if G.n > MAX_S_N:
        raise SizeBoundError("n", G.n, MAX_S_N)
    if G.m == 0:
        return 0, EdgeColoring(G, [])
    workers = default_workers() if workers is None else workers
    part = _Partitioner(G)
    if start is None:
        start = 1
        while not part.feasible(part.full, start):
            start += 1
    tau, _ = strong_upper_bound(G)
    for k in range(start, max(start, tau) + 1):
        if not part.feasible(part.full, k):
            continue
        firsts = part.choices(part.full, k)
        if workers > 1 and len(firsts) > 1:
            with ProcessPoolExecutor(workers) as ex:
                found = list(ex.map(_strong_scan, [G] * len(firsts), [part.valid] * len(firsts),
                                    [k] * len(firsts), firsts, [connected_only] * len(firsts)))
        else:
            found = []
            for a in firsts:
                found.append(_strong_scan(G, part.valid, k, a, connected_only))
                if found[-1] is not None:
                    break
        for parts in found:
            if parts is not None:
                return k, EdgeColoring.from_masks(G, parts)
    raise AssertionError("the star coloring from a minimum cover is strongly unigraphic")


def component_unigraph_number(G):
    """w for any graph: colour classes are connected, so they never span two
    components and w is the sum over components."""
    total, colors = 0, np.zeros(G.m, np.int64)
    pos = {e: i for i, e in enumerate(G.edge_list)}
    for comp in components(G):
        H, mapping = vertex_induced_subgraph(G, comp)
        if H.m == 0:
            continue
        k, c = unigraph_number(H)
        for (u, v), col in zip(H.edge_list, c.colors.tolist()):
            colors[pos[(mapping[u], mapping[v])]] = total + col
        total += k
    return total, EdgeColoring(G, colors)


def bounds(G, exact_w=False, exact_s=False):
    """Bounds on w and s with provenance; exact values for unigraphs and
    trees, and from the searches when requested and within their bounds.

    Since w <= s, a lower bound on w bounds s and an upper bound on s
    bounds w; ``applies_to`` records the direct target.
    """
    rep = DecompositionReport()
    low, up = rep.lower_bounds, rep.upper_bounds
    if G.m == 0:
        empty = EdgeColoring(G, [])
        rep.w, rep.w_witness, rep.s, rep.s_witness = 0, empty, 0, empty
        low.append(Bound(0, "trivial"))
        up.append(Bound(0, "trivial", "w,s", empty))
        return rep
    low.append(Bound(1, "trivial"))
    try:
        tau, star = strong_upper_bound(G)
        up.append(Bound(tau, "vertex-cover", "w,s", star))
    except SizeBoundError as exc:
        rep.notices.append(str(exc))
    # one colour per edge is a star coloring
    up.append(Bound(G.m, "trivial", "w,s", EdgeColoring(G, np.arange(1, G.m + 1))))
    try:
        uni = is_unigraph(G).is_unigraph
    except SizeBoundError as exc:
        # the necessary conditions still refute without a size bound
        uni = False if fast_filter(G, first_only=True) else None
        if uni is None:
            rep.notices.append(f"recognition skipped: {exc}")
    connected = is_connected(G)
    if uni is False or (uni and not connected):
        low.append(Bound(2, "trivial"))
    elif uni:
        one = EdgeColoring(G, np.ones(G.m, np.int64))
        up.append(Bound(1, "trivial", "w,s", one))
        rep.w, rep.w_witness, rep.s, rep.s_witness = 1, one, 1, one
    if rep.w is None and is_tree(G):
        k, c = tree_unigraph_number(G)
        rep.w, rep.w_witness = k, c
        low.append(Bound(k, "tree-lemma", "w,s"))
        up.append(Bound(k, "tree-lemma", "w", c))
    if exact_w and rep.w is None:
        try:
            k, c = unigraph_number(G) if connected else component_unigraph_number(G)
            rep.w, rep.w_witness = k, c
            low.append(Bound(k, "search", "w,s"))
            up.append(Bound(k, "search", "w", c))
        except SizeBoundError as exc:
            rep.notices.append(str(exc))
    if exact_s and rep.s is None:
        if not connected:
            rep.notices.append("strong search needs a connected graph")
        else:
            try:
                k, c = strong_unigraph_number(G, start=rep.w)
                rep.s, rep.s_witness = k, c
                low.append(Bound(k, "search", "s"))
                up.append(Bound(k, "search", "s", c))
            except SizeBoundError as exc:
                rep.notices.append(str(exc))
    return rep


# ------------------------------------------------------------- oracle

def _set_partitions(m):
    """Restricted growth strings: every partition of range(m) exactly once."""
    a = [0] * m

    def rec(i, top):
        if i == m:
            yield list(a)
            return
        for c in range(top + 2):
            a[i] = c
            yield from rec(i + 1, max(top, c))

    if m == 0:
        yield []
        return
    yield from rec(1, 0)


def exhaustive_minimum(G, strong=False):
    """Unpruned reference: try every partition of E(G) with the coloring
    checkers directly; returns the least number of classes that passes."""
    if G.m > MAX_EXHAUSTIVE_M:
        raise SizeBoundError("m", G.m, MAX_EXHAUSTIVE_M)
    check = is_strongly_unigraphic_coloring if strong else is_unigraphic_coloring
    best = None
    for rgs in _set_partitions(G.m):
        k = max(rgs, default=-1) + 1
        if best is not None and k >= best:
            continue
        if check(G, EdgeColoring(G, [x + 1 for x in rgs])):
            best = k
    return 0 if best is None else best
