"""Named oriented graphs and the forbidden families used throughout the package.

Vertex labels follow one convention everywhere: dicycles and dipaths use
``1..n`` in arc order; extra vertices are numbered upwards from ``n + 1``.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Sequence, Tuple

from .graph import Arc, OrientedGraph, canonical_form, converse


def dipath(n: int) -> OrientedGraph:
    return OrientedGraph.from_arcs([(i, i + 1) for i in range(1, n)], vertices=range(1, n + 1))


def dicycle(n: int) -> OrientedGraph:
    if n < 3:
        raise ValueError("a dicycle needs at least 3 vertices")
    return OrientedGraph.from_arcs([(i, i + 1) for i in range(1, n)] + [(n, 1)])


def oriented_cycle(n: int, reversed_edges: Iterable[int] = ()) -> OrientedGraph:
    """Cycle ``1..n`` where edge ``i`` joins ``i`` and ``i % n + 1``; listed
    edges point backwards, the rest follow the standard dicycle."""
    flip = set(reversed_edges)
    arcs = []
    for i in range(1, n + 1):
        j = i % n + 1
        arcs.append((j, i) if i in flip else (i, j))
    return OrientedGraph.from_arcs(arcs)


def oriented_path(directions: Sequence[bool]) -> OrientedGraph:
    """Path ``1..len+1``; ``directions[i]`` True means the arc points forward."""
    arcs = [(i + 1, i + 2) if fwd else (i + 2, i + 1) for i, fwd in enumerate(directions)]
    return OrientedGraph.from_arcs(arcs, vertices=range(1, len(directions) + 2))


def s_plus() -> OrientedGraph:
    """Oriented 3-path with a source of degree two (vertex 2)."""
    return OrientedGraph.from_arcs([(2, 1), (2, 3)])


def s_minus() -> OrientedGraph:
    return converse(s_plus())


def star(center: int, leaves: Iterable[int], inward: bool) -> OrientedGraph:
    arcs = [(leaf, center) if inward else (center, leaf) for leaf in leaves]
    return OrientedGraph.from_arcs(arcs, vertices=[center])


def positive_antler(j: int) -> OrientedGraph:
    """Dipath ``1 -> ... -> j`` whose last vertex has two extra out-arcs to ``j+1, j+2``."""
    if j < 1:
        raise ValueError("antler dipath length must be at least 1")
    arcs = [(i, i + 1) for i in range(1, j)] + [(j, j + 1), (j, j + 2)]
    return OrientedGraph.from_arcs(arcs)


def negative_antler(j: int) -> OrientedGraph:
    return converse(positive_antler(j))


def r_graph(n: int, j: int, k: int) -> OrientedGraph:
    """Dicycle ``1..n`` with a positive ``j``-antler rooted at 1 (dipath start)
    and a negative ``k``-antler rooted at 2 (dipath end), so the antlers sit
    at the tail and head of the cycle arc ``(1, 2)``."""
    if n < 3 or j < 1 or k < 1:
        raise ValueError("need n >= 3 and j, k >= 1")
    arcs = list(dicycle(n).arcs)
    nxt = itertools.count(n + 1)
    prev = 1
    for _ in range(j - 1):
        v = next(nxt)
        arcs.append((prev, v))
        prev = v
    arcs += [(prev, next(nxt)), (prev, next(nxt))]
    prev = 2
    for _ in range(k - 1):
        v = next(nxt)
        arcs.append((v, prev))
        prev = v
    arcs += [(next(nxt), prev), (next(nxt), prev)]
    return OrientedGraph.from_arcs(arcs)


def dicycle_with_pendants(n: int, pendants: Dict[int, bool]) -> OrientedGraph:
    """Dicycle ``1..n`` plus one pendant arc per key of ``pendants``; value
    True points the arc away from the cycle vertex."""
    arcs = list(dicycle(n).arcs)
    for offset, (root, outward) in enumerate(sorted(pendants.items()), start=1):
        leaf = n + offset
        arcs.append((root, leaf) if outward else (leaf, root))
    return OrientedGraph.from_arcs(arcs)


def _dedup(graphs: Iterable[OrientedGraph]) -> List[OrientedGraph]:
    seen = set()
    out = []
    for g in graphs:
        code = canonical_form(g)
        if code not in seen:
            seen.add(code)
            out.append(g)
    return out


def class_I_members(n: int = 4) -> List[OrientedGraph]:
    """Non-isomorphic graphs built from an ``n``-dicycle and two pendant arcs at
    cyclically non-adjacent vertices (three of them for ``n = 4``)."""
    if n < 4:
        raise ValueError("class I needs a dicycle of length at least 4")
    cands = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if (j - i) % n in (1, n - 1):
            continue
        for di, dj in itertools.product((True, False), repeat=2):
            cands.append(dicycle_with_pendants(n, {i: di, j: dj}))
    return _dedup(cands)


def class_T_members() -> List[OrientedGraph]:
    """The four 3-dicycles with one pendant arc at every cycle vertex."""
    cands = [
        dicycle_with_pendants(3, dict(zip((1, 2, 3), dirs)))
        for dirs in itertools.product((True, False), repeat=3)
    ]
    return _dedup(cands)


def m1_members(n_max: int) -> List[OrientedGraph]:
    """S+, S- and the dicycles up to ``n_max`` vertices."""
    out = [s_plus(), s_minus()] if n_max >= 3 else []
    out += [dicycle(n) for n in range(3, n_max + 1)]
    return out


def enumerate_unidicyclic(n_max: int, cycle_lengths: Iterable[int] = None) -> List[OrientedGraph]:
    """All strictly uni-dicyclic graphs with at most ``n_max`` vertices, up to
    isomorphism, grown from dicycles by repeatedly adding pendant arcs."""
    lengths = list(cycle_lengths) if cycle_lengths is not None else list(range(3, n_max + 1))
    result: List[OrientedGraph] = []
    for c in lengths:
        if c > n_max:
            continue
        level = [dicycle(c)]
        result.extend(level)
        for size in range(c + 1, n_max + 1):
            seen = set()
            nxt = []
            for g in level:
                for v in g.sorted_vertices():
                    for outward in (True, False):
                        arc: Tuple[int, int] = (v, size) if outward else (size, v)
                        h = OrientedGraph(g.vertices | {size}, g.arcs | {Arc(*arc)})
                        code = canonical_form(h)
                        if code not in seen:
                            seen.add(code)
                            nxt.append(h)
            result.extend(nxt)
            level = nxt
    return result
