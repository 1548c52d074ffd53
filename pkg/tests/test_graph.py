import itertools

import pytest

from obelisk.errors import GraphSyntaxError, NotSimple, SizeGuard
from obelisk.families import dicycle, dipath, oriented_cycle, oriented_path, s_minus, s_plus
from obelisk.graph import (
    Arc,
    OrientedGraph,
    Shape,
    canonical_form,
    classify_shape,
    components,
    converse,
    cycle_sequence,
    delete_arc,
    delete_vertex,
    enumerate_connected,
    format_graph,
    is_connected,
    is_isomorphic,
    neighborhoods,
    parse_graph,
    relabel,
)


def test_parse_dicycle():
    g = parse_graph("v 1 2 3\na 1 2\na 2 3\na 3 1")
    assert g == dicycle(3)


def test_parse_rejects_antiparallel():
    with pytest.raises(NotSimple):
        parse_graph("v 1 2\na 1 2\na 2 1")


def test_parse_s_plus():
    g = parse_graph("v 1 2 3\na 2 1\na 2 3")
    assert g.out_neighbors(2) == {1, 3}
    assert is_isomorphic(g, s_plus())


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphSyntaxError) as info:
        parse_graph("v 1 2\n\na 1 x")
    assert info.value.line_no == 3
    with pytest.raises(NotSimple):
        parse_graph("v 1\na 1 1")


def test_parse_undeclared_vertex():
    with pytest.raises(GraphSyntaxError):
        parse_graph("v 1\na 1 2")
    assert parse_graph("a 1 2", implicit_vertices=True) == dipath(2)


def test_format_round_trip():
    g = oriented_cycle(5, [2, 4])
    assert parse_graph(format_graph(g)) == g


def test_neighborhoods():
    assert neighborhoods(dicycle(3), 2) == ({1}, {3})
    ins, outs = neighborhoods(s_minus(), 2)
    assert ins == {1, 3} and outs == set()
    lone = OrientedGraph.from_arcs([], vertices=[7])
    assert neighborhoods(lone, 7) == (set(), set())


def test_delete_and_converse():
    assert delete_arc(dicycle(3), (3, 1)) == dipath(3)
    assert is_isomorphic(converse(s_plus()), s_minus())
    g = oriented_cycle(6, [1, 2])
    assert converse(converse(g)) == g
    h = delete_vertex(g, 3)
    assert 3 not in h.vertices and all(3 not in a for a in h.arcs)


def test_isomorphism_examples():
    assert is_isomorphic(dicycle(3), converse(dicycle(3)))
    assert not is_isomorphic(s_plus(), s_minus())
    assert not is_isomorphic(dipath(4), oriented_path([True, False, True]))


def test_isomorphism_witness():
    g = oriented_cycle(5, [1, 3])
    perm = {1: 4, 2: 1, 3: 5, 4: 2, 5: 3}
    h = relabel(g, perm)
    ok, mapping = is_isomorphic(g, h, witness=True)
    assert ok
    assert {Arc(mapping[a.tail], mapping[a.head]) for a in g.arcs} == h.arcs


def test_shapes():
    assert classify_shape(dicycle(5)) == Shape.DICYCLE
    assert classify_shape(s_plus()) == Shape.ORIENTED_PATH
    assert classify_shape(oriented_cycle(4, [1])) == Shape.ORIENTED_CYCLE
    assert classify_shape(dipath(4)) == Shape.DIPATH
    star = OrientedGraph.from_arcs([(1, 2), (1, 3), (4, 1)])
    assert classify_shape(star) == Shape.ORIENTED_TREE
    assert classify_shape(OrientedGraph.from_arcs([(1, 2), (2, 3), (1, 3), (3, 4), (4, 1)])) == Shape.OTHER


def test_cycle_sequence_starts_at_min():
    g = relabel(dicycle(4), {1: 9, 2: 3, 3: 7, 4: 5})
    seq = cycle_sequence(g)
    assert seq[0] == 3 and len(seq) == 4


def test_components_and_connectivity():
    g = OrientedGraph.from_arcs([(1, 2), (5, 6)], vertices=[9])
    assert [sorted(c.vertices) for c in components(g)] == [[1, 2], [5, 6], [9]]
    assert not is_connected(g)


def _brute_classes(n):
    """Connected oriented graphs on n labelled vertices, one per isomorphism
    class, deduplicated by minimising over all vertex permutations."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), c in zip(pairs, choice):
            if c == 1:
                arcs.append((u, v))
            elif c == 2:
                arcs.append((v, u))
        g = OrientedGraph.from_arcs(arcs, vertices=range(n))
        if not is_connected(g):
            continue
        key = min(tuple(sorted((p[u], p[v]) for u, v in arcs)) for p in perms)
        seen.add(key)
    return seen


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    ours = enumerate_connected(n)
    assert len(ours) == len(_brute_classes(n))
    assert len({canonical_form(g) for g in ours}) == len(ours)


def test_enumeration_counts_and_members():
    assert [len(enumerate_connected(n)) for n in range(1, 5)] == [1, 1, 5, 34]
    three = enumerate_connected(3)
    for target in (dicycle(3), dipath(3), s_plus(), s_minus()):
        assert any(is_isomorphic(g, target) for g in three)
    assert all(sorted(g.vertices) == [1, 2, 3, 4] for g in enumerate_connected(4))


def test_enumeration_guard():
    with pytest.raises(SizeGuard):
        enumerate_connected(8)
