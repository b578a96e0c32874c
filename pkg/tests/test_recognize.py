import pytest

from unigraph.canon import canonical_code
from unigraph.errors import GraphError, SizeBoundError
from unigraph.generate import (all_graphs, all_trees, complete, cycle, double_star, path,
                               star)
from unigraph.graph import Graph, components, degree_set, disjoint_union, is_connected
from unigraph.realize import enumerate_realizations
from unigraph.recognize import (disconnected_witness, fast_filter, is_connected_unigraph, is_unigraph,
                                is_unigraph_by_switching, tree_unigraph_class)


def _check_witness(G, v):
    assert v.witness is not None
    assert degree_set(v.witness) == degree_set(G)
    assert canonical_code(v.witness) != canonical_code(G)


def test_domino_not_unigraph(dom):
    v = is_unigraph(dom)
    assert not v.is_unigraph
    _check_witness(dom, v)
    assert degree_set(v.witness) == (3, 3, 2, 2, 2, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_complete_graphs(n):
    v = is_unigraph(complete(n))
    assert v.is_unigraph and v.witness is None and v.filter_used == "oracle"


def test_small_cases():
    assert is_unigraph(star(3)).is_unigraph
    assert is_unigraph(Graph(0, [])).is_unigraph
    assert is_unigraph(Graph(2, [])).is_unigraph


def test_connected_unigraph():
    assert is_connected_unigraph(double_star(3, 1))
    assert not is_connected_unigraph(path(5))
    assert not is_connected_unigraph(Graph(4, [(0, 1), (2, 3)]))


def test_fast_filter():
    assert "induced-P5" in fast_filter(path(5))
    assert fast_filter(path(5), first_only=True) == ("diameter",)
    assert fast_filter(cycle(8), first_only=True) == ("diameter",)
    assert fast_filter(complete(4)) == ()
    two = disjoint_union(complete(3), complete(3))
    assert fast_filter(two) == ("disconnected-structure",)


def test_fast_filter_domino(dom):
    # this labelling of the domino does contain an induced P5 (3-0-1-2-5)
    assert fast_filter(dom) == ("induced-P5",)
    assert is_unigraph(dom).filter_used == "induced-P5"


def test_filter_used_tags():
    assert is_unigraph(cycle(8)).filter_used == "diameter"
    assert is_unigraph(path(5)).filter_used == "diameter"
    v = is_unigraph(disjoint_union(path(3), path(3)))
    assert v.filter_used == "disconnected-structure"
    _check_witness(disjoint_union(path(3), path(3)), v)


def test_disconnected_witness_examples():
    H = disconnected_witness(disjoint_union(complete(3), complete(3)))
    assert is_connected(H) and degree_set(H) == (2,) * 6
    assert canonical_code(H) == canonical_code(cycle(6))
    H = disconnected_witness(disjoint_union(path(3), path(3)))
    assert sorted(len(c) for c in components(H)) == [2, 4]
    G = disjoint_union(path(3), complete(3))
    H = disconnected_witness(G)
    assert is_connected(H) and H.n == 6 and degree_set(H) == degree_set(G)
    with pytest.raises(GraphError):
        disconnected_witness(disjoint_union(path(3), path(2)))


def test_tree_classes():
    assert tree_unigraph_class(path(2)).tag == "K2"
    c = tree_unigraph_class(star(4))
    assert c.tag == "Star" and c.params == (4,) and str(c) == "K_{1,4}"
    c = tree_unigraph_class(double_star(3, 1))
    assert c.tag == "DoubleStar" and c.params == (3, 1) and str(c) == "S_{3,1}"
    c = tree_unigraph_class(path(5))
    assert c.tag == "NotTreeUnigraph" and "diameter" in c.reason
    with pytest.raises(GraphError):
        tree_unigraph_class(cycle(4))


def test_tree_class_iff_connected_unigraph():
    for n in range(2, 10):
        for T in all_trees(n):
            assert (tree_unigraph_class(T).tag != "NotTreeUnigraph") == is_connected_unigraph(T)


def test_filters_sound_exhaustive_n7():
    for n in range(1, 8):
        for G in all_graphs(n):
            if fast_filter(G):
                assert not is_unigraph(G).is_unigraph


def test_oracle_matches_definition_and_switching():
    for n in range(1, 8):
        for G in all_graphs(n, connected=True):
            classes = len(list(enumerate_realizations(degree_set(G))))
            v = is_unigraph(G)
            assert v.is_unigraph == (classes == 1)
            assert v.is_unigraph == is_unigraph_by_switching(G)
            if not v.is_unigraph:
                _check_witness(G, v)


def test_size_bound():
    with pytest.raises(SizeBoundError):
        is_unigraph(complete(13))
