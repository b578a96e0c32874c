import numpy as np
import pytest

from unigraph.coloring import is_strongly_unigraphic_coloring, is_unigraphic_coloring
from unigraph.errors import GraphError, SizeBoundError
from unigraph.generate import all_graphs, all_trees, complete, cycle, domino, path, random_graph
from unigraph.graph import Graph, degree_set, disjoint_union, edge_induced_subgraph, is_connected
from unigraph.search import (MAX_S_M, MAX_W_M, bounds, component_unigraph_number, exhaustive_minimum,
                             strong_unigraph_number, unigraph_number, valid_class_table)
from unigraph.trees import tree_unigraph_number


def _class_degree_sets(G, c):
    return [degree_set(edge_induced_subgraph(G, cls)[0]) for cls in c.classes()]


def test_domino_w(dom):
    k, c = unigraph_number(dom)
    assert k == 2 and is_unigraphic_coloring(dom, c)
    assert _class_degree_sets(dom, c) == [(2, 2, 2, 2), (2, 2, 1, 1)]


def test_domino_s(dom):
    k, c = strong_unigraph_number(dom)
    assert k == 3 and is_strongly_unigraphic_coloring(dom, c)
    # every 2-unigraphic coloring of the domino fails the strong check
    assert exhaustive_minimum(dom, strong=True) == 3


@pytest.mark.parametrize("n", range(2, 8))
def test_complete(n):
    k, c = unigraph_number(complete(n))
    assert k == 1 and c.k == 1
    if complete(n).m <= MAX_S_M:
        assert strong_unigraph_number(complete(n))[0] == 1


def test_k2_and_p7():
    assert strong_unigraph_number(complete(2))[0] == 1
    assert unigraph_number(path(7))[0] == 2


def test_edgeless():
    G = Graph(1, [])
    assert unigraph_number(G)[0] == 0
    r = bounds(Graph(3, []))
    assert r.w == 0 and r.s == 0


def test_requires_connected():
    with pytest.raises(GraphError):
        unigraph_number(disjoint_union(path(3), path(3)))
    with pytest.raises(GraphError):
        strong_unigraph_number(disjoint_union(path(3), path(3)))


def test_component_sum():
    G = disjoint_union(path(7), domino(), complete(4))
    k, c = component_unigraph_number(G)
    assert k == 2 + 2 + 1 and is_unigraphic_coloring(G, c)


def test_size_bounds(rng):
    G = complete(8)  # 28 edges
    with pytest.raises(SizeBoundError):
        unigraph_number(G)
    with pytest.raises(SizeBoundError):
        strong_unigraph_number(G)
    assert MAX_W_M >= 12 and MAX_S_M >= 8


def test_valid_table_matches_checker(dom):
    valid = valid_class_table(dom)
    for mask in range(1, 1 << dom.m):
        F = [e for i, e in enumerate(dom.edge_list) if (mask >> i) & 1]
        H = edge_induced_subgraph(dom, F)[0]
        from unigraph.recognize import is_unigraph
        assert bool(valid[mask]) == (is_connected(H) and is_unigraph(H).is_unigraph)
    assert valid[0] == 0


def test_bounds_examples(dom):
    r = bounds(complete(5))
    assert r.lower("w") == 1 and 4 in [b.value for b in r.upper_bounds if b.source == "vertex-cover"]
    assert r.w == r.s == 1
    r = bounds(dom)
    assert r.upper("s") == 3 and r.lower("w") == 2 and r.w is None
    r = bounds(path(9))
    assert r.w == 3 and any(b.source == "tree-lemma" for b in r.lower_bounds)


def test_bounds_exact(dom):
    r = bounds(dom, exact_w=True, exact_s=True)
    assert (r.w, r.s) == (2, 3)
    assert 1 <= r.w <= r.s <= r.upper("s")
    assert is_unigraphic_coloring(dom, r.w_witness)
    assert is_strongly_unigraphic_coloring(dom, r.s_witness)


def test_bounds_over_limit_reports_bounds_only():
    G = complete(8)
    r = bounds(G, exact_w=True, exact_s=True)
    # K8 is a unigraph, so w = s = 1 is certified without search
    assert r.w == r.s == 1
    G = Graph(13, cycle(13).edge_list)
    r = bounds(G, exact_w=True, exact_s=True)
    assert r.s is None and r.notices
    assert r.lower("w") >= 2 and r.upper("w") <= 7


def test_witnesses_and_sandwich_n5():
    for G in all_graphs(5, connected=True):
        w, cw = unigraph_number(G)
        s, cs = strong_unigraph_number(G)
        r = bounds(G)
        assert 1 <= w <= s <= r.upper("s")
        assert is_unigraphic_coloring(G, cw) and cw.k == w
        assert is_strongly_unigraphic_coloring(G, cs) and cs.k == s


def test_minimality_against_exhaustive():
    # every connected graph with at most 8 edges
    gs = [G for n in range(2, 9) for G in all_graphs(n, connected=True) if G.m <= 8]
    gs += list(all_trees(9))
    for G in gs:
        assert unigraph_number(G)[0] == exhaustive_minimum(G)
        assert strong_unigraph_number(G)[0] == exhaustive_minimum(G, strong=True)


def test_tree_agreement_random(rng):
    from unigraph.generate import random_tree
    for _ in range(40):
        T = random_tree(int(rng.integers(2, 14)), rng)
        assert unigraph_number(T)[0] == tree_unigraph_number(T)[0]


def test_deterministic_witness(rng):
    G = random_graph(7, 0.5, rng)
    while not is_connected(G):
        G = random_graph(7, 0.5, rng)
    a = unigraph_number(G)[1].colors.tolist()
    b = unigraph_number(G)[1].colors.tolist()
    assert a == b


def test_parallel_strong_matches_serial(dom):
    k1, c1 = strong_unigraph_number(dom, workers=1)
    k2, c2 = strong_unigraph_number(dom, workers=2)
    assert k1 == k2 and np.array_equal(c1.colors, c2.colors)
