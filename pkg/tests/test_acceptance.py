"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line through the ``criterion`` fixture; the
lines are printed in the pytest terminal summary.
"""

import itertools
import time
from pathlib import Path

from obelisk.constructive import embed_fountain, embed_oriented_cycle, embed_tree_loose, embed_unidicyclic
from obelisk.families import (
    class_I_members,
    class_T_members,
    dicycle,
    enumerate_unidicyclic,
    r_graph,
    s_minus,
    s_plus,
)
from obelisk.fountain import FountainSpec, build_fountain_tree, recognize_sink_fountain
from obelisk.generate import SplitMix64, generate, random_fountain_spec, random_tree
from obelisk.graph import (
    OrientedGraph,
    canonical_form,
    converse,
    delete_arc,
    enumerate_connected,
    is_isomorphic,
    parse_graph,
)
from obelisk.layout import SPINE, BookEmbedding, covers, is_upward, parse_embedding, reverse_converse, verify
from obelisk.oracle import has_embedding, mine_critical, obt
from obelisk.recognizers import decompose_unidicyclic, detect_forbidden

FIXTURES = Path(__file__).parent / "fixtures"


def _one_page(g, emb):
    report = verify(g, emb)
    return report.valid and emb.pages == 1


def _lower_bound_instances():
    named = [(f"class I #{i}", g) for i, g in enumerate(class_I_members(4), 1)]
    named += [(f"class T #{i}", g) for i, g in enumerate(class_T_members(), 1)]
    named += [(f"R3({j}+,{k}-)", r_graph(3, j, k)) for j, k in ((1, 1), (2, 1), (2, 2))]
    return named


def test_criterion_01_one_page_critical_class(criterion):
    start = time.time()
    found = mine_critical(6, 1)
    expected = [s_plus(), s_minus()] + [dicycle(n) for n in range(3, 7)]
    unmatched = list(found)
    ok = len(found) == len(expected)
    for e in expected:
        hit = next((g for g in unmatched if is_isomorphic(g, e)), None)
        if hit is None:
            ok = False
        else:
            unmatched.remove(hit)
    ok = ok and not unmatched
    elapsed = time.time() - start
    criterion(1, "1-page critical graphs on <= 6 vertices are S+, S-, D3..D6", ok and elapsed < 120,
              f"{len(found)} found, {elapsed:.1f}s")
    assert ok, found
    assert elapsed < 120


def test_criterion_02_oriented_cycles(criterion):
    checked = 0
    bad = []
    for n in range(3, 8):
        seen = set()
        for mask in range(1 << n):
            arcs = []
            for i in range(n):
                u, v = i + 1, (i + 1) % n + 1
                arcs.append((v, u) if mask >> i & 1 else (u, v))
            g = OrientedGraph.from_arcs(arcs)
            code = canonical_form(g)
            if code in seen:
                continue
            seen.add(code)
            checked += 1
            if obt(g).thickness != 1 or not _one_page(g, embed_oriented_cycle(g)):
                bad.append(g)
    criterion(2, "every oriented cycle C3..C7 has obt 1 and a verified constructive embedding", not bad,
              f"{checked} orientations")
    assert not bad


def test_criterion_03_natural_ordering_law(criterion):
    problems = []
    for n in range(3, 7):
        g = dicycle(n)
        cyc = list(range(1, n + 1))
        natural = set()
        for r in range(n):
            rot = tuple(cyc[r:] + cyc[:r])
            natural.add(rot)
            natural.add(tuple(reversed(rot)))
        arcs = g.sorted_arcs()
        orders_with_embedding = set()
        for order in itertools.permutations(cyc):
            for choice in itertools.product((SPINE, 0), repeat=len(arcs)):
                emb = BookEmbedding(order, dict(zip(arcs, choice)), 1)
                if not verify(g, emb).valid:
                    continue
                orders_with_embedding.add(order)
                loose = emb.loose_arcs()
                ends = {order[0], order[-1]}
                if len(loose) != 1 or {loose[0].tail, loose[0].head} != ends:
                    problems.append((n, order, choice))
        if orders_with_embedding != natural:
            problems.append((n, "orders", sorted(orders_with_embedding ^ natural)))
    criterion(3, "D3..D6 embed in one page exactly at natural orderings, one loose arc top-to-bottom",
              not problems)
    assert not problems, problems[:5]


def test_criterion_04_otso_contract(criterion):
    rng = SplitMix64(4)
    failures = []
    runs = 0
    for _ in range(1000):
        t = random_tree(rng, rng.between(2, 10))
        for root in t.sorted_vertices():
            runs += 1
            emb = embed_tree_loose(t, root)
            pos = emb.positions
            ok = (
                _one_page(t, emb)
                and not emb.tight_arcs()
                and all(is_upward(a, pos) for a in t.arcs)
                and not any(covers(a, root, pos) for a in t.arcs)
            )
            if not ok:
                failures.append((t, root))
    criterion(4, "embed_tree_loose: 1 page, no tight arcs, upward, root uncovered", not failures,
              f"1000 trees, {runs} roots")
    assert not failures


def _nested_groups(spec: FountainSpec, emb: BookEmbedding) -> bool:
    pos = emb.positions
    groups = [[a for a in spec.attached[x].arcs if a.head == x] for x in spec.spine_path]
    for outer, inner in zip(groups, groups[1:]):
        for a in inner:
            for b in outer:
                lo_a, hi_a = sorted((pos[a.tail], pos[a.head]))
                lo_b, hi_b = sorted((pos[b.tail], pos[b.head]))
                if not (lo_b < lo_a and hi_a < hi_b):
                    return False
    return True


def test_criterion_05_fountain_embeddings(criterion):
    rng = SplitMix64(5)
    failures = []
    for i in range(500):
        spec = random_fountain_spec(rng, max_path=4, max_tree=5)
        t = build_fountain_tree(spec)
        emb = embed_fountain(spec)
        back = recognize_sink_fountain(t, spec.spine_path[0])
        round_trip = (
            isinstance(back, FountainSpec)
            and back.spine_path == spec.spine_path
            and all(back.attached[x] == spec.attached[x] for x in spec.spine_path)
        )
        if not (_one_page(t, emb) and _nested_groups(spec, emb) and round_trip):
            failures.append(i)
    criterion(5, "fountain trees: verified 1-page embedding, nested groups, spec round-trip", not failures,
              "500 specs")
    assert not failures


def test_criterion_06_lower_bounds(criterion):
    start = time.time()
    wrong = [(name, obt(g, max_n=9).thickness) for name, g in _lower_bound_instances()]
    wrong = [w for w in wrong if w[1] != 2]
    elapsed = time.time() - start
    criterion(6, "class I, class T and R3 members have obt 2", not wrong and elapsed < 300,
              f"10 graphs, {elapsed:.1f}s")
    assert not wrong, wrong


def test_criterion_07_criticality(criterion):
    failures = []
    count = 0
    for name, g in _lower_bound_instances():
        if len(g.vertices) > 8:
            continue
        count += 1
        for a in g.sorted_arcs():
            if not has_embedding(delete_arc(g, a), 1):
                failures.append((name, a))
    criterion(7, "deleting any arc of a lower-bound instance on <= 8 vertices leaves obt <= 1", not failures,
              f"{count} graphs")
    assert not failures, failures


def _agreement(g):
    emb = embed_unidicyclic(g)
    witness = detect_forbidden(decompose_unidicyclic(g))
    k = obt(g).thickness
    embedded = isinstance(emb, BookEmbedding)
    if embedded != (witness is None) or embedded != (k == 1):
        return False
    if embedded:
        return _one_page(g, emb)
    return k == 2


def test_criterion_08_unidicyclic_equivalence(criterion):
    start = time.time()
    exhaustive = enumerate_unidicyclic(7, range(3, 7))
    bad = [g for g in exhaustive if not _agreement(g)]
    randoms = [generate("unidicyclic", 8, seed) for seed in range(2000)]
    bad += [g for g in randoms if not _agreement(g)]
    elapsed = time.time() - start
    criterion(8, "embedder, detectors and oracle agree on strictly uni-dicyclic graphs",
              not bad and elapsed < 900, f"{len(exhaustive)} exhaustive + 2000 random, {elapsed:.0f}s")
    assert not bad, bad[:3]


def test_criterion_09_verifier_fixtures(criterion):
    expected = {
        "bad_spine": "BadSpine",
        "unplaced_arc": "UnplacedArc",
        "tight_non_consecutive": "TightNonConsecutive",
        "spine_direction_clash": "SpineDirectionClash",
        "page_direction_clash": "PageDirectionClash",
        "planarity_violation": "PlanarityViolation",
    }
    got = {}
    for stem in expected:
        g = parse_graph((FIXTURES / f"{stem}.graph").read_text())
        emb = parse_embedding((FIXTURES / f"{stem}.emb").read_text())
        got[stem] = [r.value for r in verify(g, emb).rules()]
    ok = all(got[s] == [rule] for s, rule in expected.items())
    criterion(9, "each verifier fixture triggers exactly its own rule", ok)
    assert ok, got


def test_criterion_10_converse_symmetry(criterion):
    start = time.time()
    bad = []
    total = 0
    for n in range(1, 6):
        for g in enumerate_connected(n):
            total += 1
            res = obt(g)
            conv = converse(g)
            mapped = reverse_converse(res.witness)
            if obt(conv).thickness != res.thickness:
                bad.append(g)
            elif not verify(conv, mapped).valid or mapped.pages != res.witness.pages:
                bad.append(g)
    elapsed = time.time() - start
    criterion(10, "obt(converse g) = obt(g) and mapped witnesses verify, connected n <= 5",
              not bad and elapsed < 120, f"{total} graphs, {elapsed:.1f}s")
    assert not bad
