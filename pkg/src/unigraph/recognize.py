"""Unigraph recognition.

Cheap necessary conditions run first (component structure, diameter,
induced P5); the deciding oracle walks the realizations of the degree set
and stops at the first one that is not isomorphic to the input.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canon import canonical_code
from .errors import GraphError, SizeBoundError
from .graph import (Graph, components, contains_induced_p5, degree_set, diameter,
                    is_connected, is_tree)
from .realize import MAX_REALIZE_N, havel_hakimi, is_graphical, iter_realizations

MAX_ORACLE_N = MAX_REALIZE_N


@dataclass(frozen=True)
class RecognitionVerdict:
    is_unigraph: bool
    witness: Optional[Graph]
    filter_used: str  # "induced-P5" | "diameter" | "disconnected-structure" | "oracle"

    def __bool__(self):
        return self.is_unigraph


@dataclass(frozen=True)
class TreeUnigraphClass:
    tag: str  # "K2" | "Star" | "DoubleStar" | "NotTreeUnigraph"
    params: tuple = ()
    reason: Optional[str] = None

    def __str__(self):
        if self.tag == "Star":
            return f"K_{{1,{self.params[0]}}}"
        if self.tag == "DoubleStar":
            return f"S_{{{self.params[0]},{self.params[1]}}}"
        if self.tag == "NotTreeUnigraph":
            return f"NotTreeUnigraph({self.reason})"
        return self.tag


def _quick_invariant(G):
    deg = G.degrees.tolist()
    return sorted((deg[v], tuple(sorted(deg[w] for w in G.neighbors[v]))) for v in range(G.n))


def fast_filter(G, first_only=False):
    """Tags of the violated necessary conditions for unigraphs, cheapest
    first; an empty tuple means "unknown". Never certifies a unigraph.

    Tags: "disconnected-structure" (two components with three or more
    vertices), "diameter" (connected with diameter above three),
    "induced-P5".
    """
    reasons = []
    comps = components(G)
    if len(comps) > 1:
        if sum(1 for c in comps if len(c) >= 3) >= 2:
            reasons.append("disconnected-structure")
    elif G.n > 1 and diameter(G) > 3:
        reasons.append("diameter")
    if reasons and first_only:
        return tuple(reasons)
    if contains_induced_p5(G)[0]:
        reasons.append("induced-P5")
    return tuple(reasons)


def disconnected_witness(G):
    """Same-degree-set graph not isomorphic to G, for G with two components
    of at least three vertices, by one swap of an edge from each.

    In each of the first two large components pick a cycle edge if the
    component has a cycle, otherwise a pendant edge ``(u, v)`` with u the
    leaf. Replace ``u1v1, u2v2`` by ``u1u2, v1v2``.
    """
    big = [c for c in components(G) if len(c) >= 3]
    if len(big) < 2:
        raise GraphError("needs two components with at least three vertices")
    picks = []
    for comp in big[:2]:
        cs = set(comp)
        cedges = [e for e in G.edge_list if e[0] in cs]
        if len(cedges) >= len(comp):
            e = next(e for e in cedges if not _is_bridge(G, e))
            picks.append(("cycle", e))
        else:
            deg = G.degrees
            leaf = min(v for v in comp if deg[v] == 1)
            picks.append(("pendant", (leaf, G.neighbors[leaf][0])))
    (_, (u1, v1)), (_, (u2, v2)) = picks
    keep = set(G.edge_list) - {tuple(sorted((u1, v1))), tuple(sorted((u2, v2)))}
    H = Graph(G.n, sorted(keep | {tuple(sorted((u1, u2))), tuple(sorted((v1, v2)))}))
    assert degree_set(H) == degree_set(G)
    if G.n <= MAX_ORACLE_N:
        assert canonical_code(H) != canonical_code(G)
    return H


def _is_bridge(G, e):
    u, v = e
    seen, stack = {u}, [u]
    while stack:
        x = stack.pop()
        for y in G.neighbors[x]:
            if {x, y} == {u, v} or y in seen:
                continue
            if y == v:
                return False
            seen.add(y)
            stack.append(y)
    return True


def two_switches(G):
    """Yield every graph one 2-switch away from G: edges ab, cd with ac, bd
    absent become ac, bd."""
    E = G.edge_list
    edges = set(E)
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            a, b = E[i]
            c, d = E[j]
            if len({a, b, c, d}) < 4:
                continue
            for x, y, z, w in ((a, c, b, d), (a, d, b, c)):
                e1, e2 = tuple(sorted((x, y))), tuple(sorted((z, w)))
                if e1 in edges or e2 in edges:
                    continue
                yield Graph(G.n, sorted((edges - {E[i], E[j]}) | {e1, e2}))


def switch_witness(G):
    """A 2-switch of G that is not isomorphic to G, or ``None``.

    Realizations of a degree sequence are connected under 2-switches, so
    ``None`` here means G is a unigraph.
    """
    if G.n > MAX_ORACLE_N:
        raise SizeBoundError("n", G.n, MAX_ORACLE_N)
    inv = _quick_invariant(G)
    code = None
    for H in two_switches(G):
        if _quick_invariant(H) != inv:
            return H
        if code is None:
            code = canonical_code(G)
        if canonical_code(H) != code:
            return H
    return None


def is_unigraph_by_switching(G):
    return switch_witness(G) is None


def _oracle_witness(G):
    inv = _quick_invariant(G)
    code = canonical_code(G)
    for H in iter_realizations(degree_set(G)):
        if _quick_invariant(H) != inv or canonical_code(H) != code:
            return H
    return None


def is_unigraph(G):
    """Decide whether every graph with G's degree set is isomorphic to G."""
    if G.n > MAX_ORACLE_N:
        raise SizeBoundError("n", G.n, MAX_ORACLE_N)
    reasons = fast_filter(G, first_only=True)
    if reasons == ("disconnected-structure",):
        return RecognitionVerdict(False, disconnected_witness(G), reasons[0])
    if reasons:
        return RecognitionVerdict(False, switch_witness(G), reasons[0])
    witness = _oracle_witness(G)
    return RecognitionVerdict(witness is None, witness, "oracle")


def is_connected_unigraph(G):
    return is_connected(G) and is_unigraph(G).is_unigraph


@lru_cache(maxsize=None)
def degree_sequence_profile(ds):
    """``(unigraphic, connected)`` for a degree sequence (zeros dropped).

    A sequence is unigraphic when all its realizations are isomorphic; the
    connectivity of that single class is then a property of the sequence.
    """
    ds = tuple(sorted((d for d in ds if d), reverse=True))
    if not is_graphical(ds):
        raise GraphError(f"degree sequence {ds} is not graphical")
    G = havel_hakimi(ds)
    if G.n > MAX_ORACLE_N and fast_filter(G, first_only=True):
        # refuted without the size-bounded oracle
        return False, is_connected(G)
    return is_unigraph(G).is_unigraph, is_connected(G)


def tree_unigraph_class(T):
    """Classify a tree as K2, a star K_{1,p}, a double star S_{q,r}, or not
    a unigraph (diameter above three)."""
    if not is_tree(T):
        raise GraphError("input is not a tree")
    if T.n == 1:
        return TreeUnigraphClass("NotTreeUnigraph", (), "no edges")
    if T.n == 2:
        return TreeUnigraphClass("K2")
    d = diameter(T)
    deg = T.degrees
    if d == 2:
        return TreeUnigraphClass("Star", (T.n - 1,))
    if d == 3:
        u, v = [x for x in range(T.n) if deg[x] > 1]
        q, r = sorted((int(deg[u]) - 1, int(deg[v]) - 1), reverse=True)
        return TreeUnigraphClass("DoubleStar", (q, r))
    return TreeUnigraphClass("NotTreeUnigraph", (), f"diameter {d} > 3")
