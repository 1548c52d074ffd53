import pytest

from obelisk.errors import CycleNotDirected, Disconnected, MultipleCycles, NoCycle, NotATree
from obelisk.families import (
    class_I_members,
    class_T_members,
    dicycle,
    dicycle_with_pendants,
    dipath,
    enumerate_unidicyclic,
    negative_antler,
    oriented_cycle,
    positive_antler,
    r_graph,
    s_minus,
    s_plus,
    star,
)
from obelisk.fountain import NEGATIVE, POSITIVE, AntlerWitness, FountainSpec, recognize_sink_fountain, recognize_source_fountain
from obelisk.graph import OrientedGraph, converse, enumerate_connected, is_isomorphic, union
from obelisk.oracle import is_k_page_critical, obt
from obelisk.recognizers import (
    Family,
    classify_M1,
    decompose_unidicyclic,
    detect_forbidden,
    detect_I,
    detect_R,
    detect_T,
    heavy_vertices,
    is_M1,
    m1_witness,
    witness_graph,
)


def test_antler_recognition():
    w = recognize_sink_fountain(s_plus(), 2)
    assert isinstance(w, AntlerWitness) and w.j == 1 and w.branch_vertex == 2 and w.sign == POSITIVE
    w = recognize_sink_fountain(positive_antler(3), 1)
    assert isinstance(w, AntlerWitness) and w.j == 3 and w.dipath == (1, 2, 3)
    w = recognize_source_fountain(negative_antler(2), 1)
    assert isinstance(w, AntlerWitness) and w.sign == NEGATIVE and w.j == 2
    spec = recognize_sink_fountain(s_minus(), 2)
    assert isinstance(spec, FountainSpec) and spec.spine_path == (2,)
    with pytest.raises(NotATree):
        recognize_sink_fountain(dicycle(3), 1)


def test_decompose():
    g = dicycle_with_pendants(3, {2: True})
    d = decompose_unidicyclic(g)
    assert d.dicycle == (1, 2, 3)
    assert heavy_vertices(d) == [2]
    assert len(d.tree(2).vertices) == 2
    with pytest.raises(CycleNotDirected):
        decompose_unidicyclic(oriented_cycle(4, [1]))
    theta = OrientedGraph.from_arcs([(1, 2), (2, 3), (3, 1), (1, 4), (4, 3)])
    with pytest.raises(MultipleCycles):
        decompose_unidicyclic(theta)
    with pytest.raises(NoCycle):
        decompose_unidicyclic(dipath(3))
    with pytest.raises(Disconnected):
        decompose_unidicyclic(union(dicycle(3), OrientedGraph.from_arcs([(7, 8)])))


def test_heavy_vertices():
    assert heavy_vertices(decompose_unidicyclic(dicycle(5))) == []
    for g in class_T_members():
        assert len(heavy_vertices(decompose_unidicyclic(g))) == 3


def test_classify_M1():
    assert classify_M1(s_plus()) == Family.S_PLUS
    assert classify_M1(dicycle(6)) == Family.DICYCLE
    assert not is_M1(dipath(4))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classify_M1_matches_oracle(n):
    for g in enumerate_connected(n):
        assert is_M1(g) == is_k_page_critical(g, 1)


def test_m1_witness_exists_iff_obt_positive():
    for n in range(1, 5):
        for g in enumerate_connected(n):
            w = m1_witness(g)
            assert (w is None) == (obt(g).thickness == 0)
            if w is not None:
                assert is_M1(w.subgraph())


def test_detect_I():
    assert detect_I(decompose_unidicyclic(dicycle_with_pendants(4, {1: True, 3: False}))) is not None
    assert detect_I(decompose_unidicyclic(dicycle_with_pendants(4, {1: True, 2: True}))) is None
    # positions 1 and n are adjacent on the cycle
    assert detect_I(decompose_unidicyclic(dicycle_with_pendants(5, {1: True, 5: True}))) is None
    assert detect_I(decompose_unidicyclic(dicycle_with_pendants(3, {1: True, 2: True, 3: True}))) is None


def test_detect_T():
    for g in class_T_members():
        assert detect_T(decompose_unidicyclic(g)) is not None
    assert detect_T(decompose_unidicyclic(dicycle_with_pendants(3, {1: True, 2: False}))) is None
    full4 = dicycle_with_pendants(4, {1: True, 2: True, 3: True, 4: True})
    d = decompose_unidicyclic(full4)
    assert detect_T(d) is None and detect_I(d) is not None


def test_detect_R():
    w = detect_R(decompose_unidicyclic(r_graph(3, 1, 1)))
    assert w is not None and w.family == Family.CLASS_R
    assert is_isomorphic(w.subgraph(), r_graph(3, 1, 1))
    w = detect_R(decompose_unidicyclic(r_graph(3, 2, 1)))
    assert w is not None and is_isomorphic(w.pattern(), r_graph(3, 2, 1))
    stars = union(dicycle(4), star(1, [5, 6], True), star(2, [7, 8], False))
    assert detect_R(decompose_unidicyclic(stars)) is None
    assert obt(stars).thickness == 1


def _family_members(family, n):
    if family == Family.CLASS_T:
        return class_T_members()
    if family == Family.CLASS_I:
        return class_I_members(n)
    return None


def test_witness_soundness():
    hits = 0
    for g in enumerate_unidicyclic(7, range(3, 7)):
        w = detect_forbidden(decompose_unidicyclic(g))
        if w is None:
            continue
        hits += 1
        sub = witness_graph(g, w)
        assert obt(sub).thickness == 2
        members = _family_members(w.family, len(decompose_unidicyclic(g)))
        if members is not None:
            assert any(is_isomorphic(sub, m) for m in members)
        else:
            assert is_k_page_critical(sub, 2, max_n=len(sub.vertices))
    assert hits > 0


def test_detectors_commute_with_converse():
    for g in enumerate_unidicyclic(6, range(3, 6)):
        a = detect_forbidden(decompose_unidicyclic(g))
        b = detect_forbidden(decompose_unidicyclic(converse(g)))
        assert (a is None) == (b is None)
        if a is not None:
            assert a.family == b.family


def test_witness_format():
    w = detect_T(decompose_unidicyclic(class_T_members()[0]))
    text = w.format()
    assert text.startswith("family ClassT\n")
    assert text.count("pattern ") == 6 and text.count("arc ") == 6
