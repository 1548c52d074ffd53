"""Oriented graphs: representation, file format, basic operations, isomorphism."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from .errors import (
    Disconnected,
    GraphSyntaxError,
    NotSimple,
    SizeGuard,
    UnknownArc,
    UnknownVertex,
)

ENUMERATION_MAX_N = 7


class Arc(NamedTuple):
    tail: int
    head: int

    def reversed(self) -> "Arc":
        return Arc(self.head, self.tail)


@dataclass(frozen=True)
class OrientedGraph:
    """An orientation of a simple graph.

    Instances are immutable. Loops and anti-parallel pairs are rejected on
    construction, so every arc corresponds to exactly one underlying edge.
    """

    vertices: FrozenSet[int]
    arcs: FrozenSet[Arc]

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(int(v) for v in self.vertices))
        object.__setattr__(self, "arcs", frozenset(Arc(int(t), int(h)) for t, h in self.arcs))
        for v in self.vertices:
            if v < 0:
                raise ValueError(f"vertex ids must be non-negative, got {v}")
        for a in self.arcs:
            if a.tail == a.head:
                raise NotSimple(f"loop at vertex {a.tail}")
            if a.tail not in self.vertices or a.head not in self.vertices:
                raise UnknownVertex(f"arc {a} has an endpoint outside the vertex set")
            if a.reversed() in self.arcs:
                raise NotSimple(f"anti-parallel pair between {a.tail} and {a.head}")

    @classmethod
    def from_arcs(cls, arcs: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()) -> "OrientedGraph":
        arcs = [Arc(*a) for a in arcs]
        vs = set(vertices)
        for t, h in arcs:
            vs.add(t)
            vs.add(h)
        return cls(frozenset(vs), frozenset(arcs))

    @cached_property
    def _out(self) -> Dict[int, FrozenSet[int]]:
        out: Dict[int, set] = {v: set() for v in self.vertices}
        for t, h in self.arcs:
            out[t].add(h)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def _in(self) -> Dict[int, FrozenSet[int]]:
        inn: Dict[int, set] = {v: set() for v in self.vertices}
        for t, h in self.arcs:
            inn[h].add(t)
        return {v: frozenset(s) for v, s in inn.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> List[int]:
        return sorted(self.vertices)

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return self._in[v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.out_neighbors(v) | self.in_neighbors(v)

    def degree(self, v: int) -> int:
        return len(self.out_neighbors(v)) + len(self.in_neighbors(v))

    def is_sink(self, v: int) -> bool:
        """True when every neighbor of ``v`` is an in-neighbor (isolated vertices qualify)."""
        return not self.out_neighbors(v)

    def is_source(self, v: int) -> bool:
        return not self.in_neighbors(v)

    def has_arc(self, tail: int, head: int) -> bool:
        return Arc(tail, head) in self.arcs

    def arc_between(self, u: int, v: int) -> Optional[Arc]:
        """The arc joining ``u`` and ``v`` in whichever direction, or None."""
        if Arc(u, v) in self.arcs:
            return Arc(u, v)
        if Arc(v, u) in self.arcs:
            return Arc(v, u)
        return None

    def _check_vertex(self, v: int) -> None:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")

    def __str__(self) -> str:
        return format_graph(self)


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------


def _parse_int(token: str, line_no: int) -> int:
    if not token.isdigit():
        raise GraphSyntaxError(f"expected a non-negative integer, got {token!r}", line_no)
    return int(token)


def parse_graph(text: str, implicit_vertices: bool = False) -> OrientedGraph:
    """Parse the line-oriented graph format (``v`` / ``a`` / ``#`` records)."""
    vertices: set = set()
    arcs: List[Tuple[int, int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            vertices.update(_parse_int(t, line_no) for t in args)
        elif kind == "a":
            if len(args) != 2:
                raise GraphSyntaxError("arc record needs exactly two vertex ids", line_no)
            t, h = (_parse_int(x, line_no) for x in args)
            arcs.append((t, h, line_no))
        else:
            raise GraphSyntaxError(f"unknown record type {kind!r}", line_no)

    seen: Dict[FrozenSet[int], Tuple[int, int]] = {}
    for t, h, line_no in arcs:
        if t == h:
            raise NotSimple(f"line {line_no}: loop at vertex {t}")
        key = frozenset((t, h))
        if key in seen:
            what = "duplicate arc" if seen[key] == (t, h) else "anti-parallel pair"
            raise NotSimple(f"line {line_no}: {what} between {t} and {h}")
        seen[key] = (t, h)
        for v in (t, h):
            if v not in vertices:
                if not implicit_vertices:
                    raise GraphSyntaxError(f"arc uses undeclared vertex {v}", line_no)
                vertices.add(v)
    return OrientedGraph(frozenset(vertices), frozenset(Arc(t, h) for t, h, _ in arcs))


def format_graph(g: OrientedGraph) -> str:
    lines = ["v " + " ".join(str(v) for v in g.sorted_vertices())]
    lines.extend(f"a {t} {h}" for t, h in g.sorted_arcs())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------


def neighborhoods(g: OrientedGraph, v: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Return ``(in_neighbors, out_neighbors)`` of ``v``."""
    return g.in_neighbors(v), g.out_neighbors(v)


def delete_arc(g: OrientedGraph, a: Tuple[int, int]) -> OrientedGraph:
    a = Arc(*a)
    if a not in g.arcs:
        raise UnknownArc(f"arc {tuple(a)} not in graph")
    return OrientedGraph(g.vertices, g.arcs - {a})


def delete_vertex(g: OrientedGraph, v: int) -> OrientedGraph:
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v} not in graph")
    return OrientedGraph(g.vertices - {v}, frozenset(a for a in g.arcs if v not in a))


def converse(g: OrientedGraph) -> OrientedGraph:
    return OrientedGraph(g.vertices, frozenset(a.reversed() for a in g.arcs))


def relabel(g: OrientedGraph, mapping: Mapping[int, int]) -> OrientedGraph:
    return OrientedGraph(
        frozenset(mapping[v] for v in g.vertices),
        frozenset(Arc(mapping[t], mapping[h]) for t, h in g.arcs),
    )


def subgraph(g: OrientedGraph, vertices: Iterable[int]) -> OrientedGraph:
    """Induced oriented subgraph on ``vertices``."""
    vs = frozenset(vertices)
    return OrientedGraph(vs, frozenset(a for a in g.arcs if a.tail in vs and a.head in vs))


def union(*graphs: OrientedGraph) -> OrientedGraph:
    vs: set = set()
    arcs: set = set()
    for h in graphs:
        vs |= h.vertices
        arcs |= h.arcs
    return OrientedGraph(frozenset(vs), frozenset(arcs))


def components(g: OrientedGraph) -> List[OrientedGraph]:
    """Weakly connected components, ordered by smallest vertex id."""
    seen: set = set()
    result = []
    for start in g.sorted_vertices():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        result.append(subgraph(g, comp))
    return result


def is_connected(g: OrientedGraph) -> bool:
    return len(g.vertices) > 0 and len(components(g)) == 1


def cyclomatic_number(g: OrientedGraph) -> int:
    """Number of independent cycles of the underlying graph."""
    return len(g.arcs) - len(g.vertices) + len(components(g))


def is_tree(g: OrientedGraph) -> bool:
    return is_connected(g) and len(g.arcs) == len(g.vertices) - 1


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------


class Shape(str, enum.Enum):
    DIPATH = "Dipath"
    ORIENTED_PATH = "OrientedPath"
    DICYCLE = "Dicycle"
    ORIENTED_CYCLE = "OrientedCycle"
    ORIENTED_TREE = "OrientedTree"
    OTHER = "Other"


def classify_shape(g: OrientedGraph) -> Shape:
    """Most specific shape label of a connected oriented graph.

    A single vertex counts as a (trivial) dipath.
    """
    if not is_connected(g):
        raise Disconnected("classify_shape needs a connected graph")
    degrees = [g.degree(v) for v in g.vertices]
    n, m = len(g.vertices), len(g.arcs)
    if m == n - 1:
        if max(degrees, default=0) <= 2:
            directed = all(len(g.out_neighbors(v)) <= 1 and len(g.in_neighbors(v)) <= 1 for v in g.vertices)
            return Shape.DIPATH if directed else Shape.ORIENTED_PATH
        return Shape.ORIENTED_TREE
    if m == n and all(d == 2 for d in degrees):
        directed = all(len(g.out_neighbors(v)) == 1 for v in g.vertices)
        return Shape.DICYCLE if directed else Shape.ORIENTED_CYCLE
    return Shape.OTHER


def cycle_sequence(g: OrientedGraph) -> List[int]:
    """Vertices of an oriented cycle in cyclic order.

    Starts at the smallest id and steps first towards its smaller-id neighbor.
    """
    if classify_shape(g) not in (Shape.DICYCLE, Shape.ORIENTED_CYCLE):
        raise ValueError("graph is not a cycle")
    start = min(g.vertices)
    seq = [start]
    prev, cur = start, min(g.neighbors(start))
    while cur != start:
        seq.append(cur)
        prev, cur = cur, next(w for w in g.neighbors(cur) if w != prev)
    return seq


# ---------------------------------------------------------------------------
# Canonical form and isomorphism
# ---------------------------------------------------------------------------


def _refine(g: OrientedGraph, colors: Dict[int, int]) -> Dict[int, int]:
    """Colour refinement by in/out neighbour colour multisets until stable."""
    while True:
        sig = {
            v: (
                colors[v],
                tuple(sorted(colors[w] for w in g._out[v])),
                tuple(sorted(colors[w] for w in g._in[v])),
            )
            for v in g.vertices
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in g.vertices}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def _encode(g: OrientedGraph, order: List[int]) -> Tuple[Tuple[int, int], ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted((pos[t], pos[h]) for t, h in g.arcs))


def canonical_labeling(g: OrientedGraph) -> Tuple[Tuple, List[int]]:
    """Return ``(code, order)``: an isomorphism-invariant code and the vertex
    order realising it. Two graphs are isomorphic iff their codes are equal.

    Individualisation-refinement without automorphism pruning; adequate for
    the desk-scale graphs this package handles (n <= 10).
    """
    best: List[Optional[Tuple]] = [None, None]

    def search(colors: Dict[int, int]) -> None:
        colors = _refine(g, colors)
        cells: Dict[int, List[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            order = sorted(g.vertices, key=colors.__getitem__)
            code = _encode(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        for v in sorted(cells[target]):
            search({u: 2 * c + (0 if u == v else 1) for u, c in colors.items()})

    if not g.vertices:
        return (0, ()), []
    search({v: 0 for v in g.vertices})
    return (len(g.vertices), best[0]), best[1]


def canonical_form(g: OrientedGraph) -> Tuple:
    return canonical_labeling(g)[0]


def is_isomorphic(g1: OrientedGraph, g2: OrientedGraph, witness: bool = False):
    """Exact isomorphism test; with ``witness=True`` returns ``(bool, mapping)``
    where ``mapping`` sends vertices of ``g1`` to vertices of ``g2``."""
    if len(g1.vertices) != len(g2.vertices) or len(g1.arcs) != len(g2.arcs):
        return (False, None) if witness else False
    code1, order1 = canonical_labeling(g1)
    code2, order2 = canonical_labeling(g2)
    same = code1 == code2
    if not witness:
        return same
    return same, (dict(zip(order1, order2)) if same else None)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _underlying_graphs(n: int):
    """Connected simple graphs on ``n`` vertices, one per isomorphism class,
    as lists of edges over vertices ``0..n-1``."""
    import networkx as nx

    if n <= 7:
        graphs = [G for G in nx.graph_atlas_g() if G.number_of_nodes() == n and nx.is_connected(G)]
    else:
        graphs = _augment_underlying(n)
    return [sorted(tuple(sorted(e)) for e in G.edges()) for G in graphs]


def _augment_underlying(n: int):
    """Isomorphism classes of connected graphs on ``n`` vertices by edge augmentation."""
    import networkx as nx

    level = [nx.empty_graph(n)]
    found = []
    for _ in range(n * (n - 1) // 2):
        buckets: Dict[str, list] = {}
        nxt = []
        for G in level:
            for u, v in itertools.combinations(range(n), 2):
                if G.has_edge(u, v):
                    continue
                H = G.copy()
                H.add_edge(u, v)
                key = nx.weisfeiler_lehman_graph_hash(H)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(H, K) for K in bucket):
                    continue
                bucket.append(H)
                nxt.append(H)
        found.extend(G for G in nxt if nx.is_connected(G))
        level = nxt
    return found


def _orientation_representatives(n: int, edges: List[Tuple[int, int]]) -> List[int]:
    """Orientation bitmasks (bit e set = edge e reversed) that are minimal in
    their orbit under the automorphism group of the underlying graph."""
    import networkx as nx
    import numpy as np

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    index = {e: i for i, e in enumerate(edges)}
    m = len(edges)
    masks = np.arange(1 << m, dtype=np.int64)
    keep = np.ones(1 << m, dtype=bool)
    for sigma in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter():
        image = np.zeros(1 << m, dtype=np.int64)
        for i, (u, v) in enumerate(edges):
            su, sv = sigma[u], sigma[v]
            j = index[(min(su, sv), max(su, sv))]
            bit = (masks >> i) & 1
            if su > sv:
                bit ^= 1
            image |= bit << j
        keep &= masks <= image
    return [int(x) for x in np.nonzero(keep)[0]]


def enumerate_connected(n: int, allow_large: bool = False) -> List[OrientedGraph]:
    """One representative per isomorphism class of connected oriented graphs
    on ``n`` vertices, labelled ``1..n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > ENUMERATION_MAX_N and not allow_large:
        raise SizeGuard(f"enumerate_connected guarded at n <= {ENUMERATION_MAX_N} (got {n})")
    if n == 1:
        return [OrientedGraph(frozenset({1}), frozenset())]
    result = []
    for edges in _underlying_graphs(n):
        for mask in _orientation_representatives(n, edges):
            arcs = []
            for i, (u, v) in enumerate(edges):
                arcs.append((v + 1, u + 1) if mask >> i & 1 else (u + 1, v + 1))
            result.append(OrientedGraph(frozenset(range(1, n + 1)), frozenset(Arc(*a) for a in arcs)))
    return result
