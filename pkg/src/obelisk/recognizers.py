"""Structure detection for strictly uni-dicyclic graphs and the 1-page critical class.

A strictly uni-dicyclic graph is a dicycle with an oriented tree 1-summed at
every cycle vertex. The detectors below look for the three 2-page critical
families inside such a graph: two pendant arcs at non-adjacent cycle
vertices (class I), a 3-dicycle with all three vertices heavy (class T), and a
positive antler at the tail plus a negative antler at the head of one cycle
arc (class R).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import CycleNotDirected, Disconnected, MultipleCycles, NoCycle
from .fountain import AntlerWitness, recognize_sink_fountain, recognize_source_fountain
from .graph import Arc, OrientedGraph, components, cyclomatic_number, is_connected, relabel, subgraph


class Family(str, enum.Enum):
    S_PLUS = "SPlus"
    S_MINUS = "SMinus"
    DICYCLE = "Dicycle"
    CLASS_I = "ClassI"
    CLASS_T = "ClassT"
    CLASS_R = "ClassR"


@dataclass(frozen=True)
class DicycleDecomposition:
    dicycle: Tuple[int, ...]
    attached: Mapping[int, OrientedGraph]

    def __post_init__(self):
        object.__setattr__(self, "dicycle", tuple(self.dicycle))
        object.__setattr__(self, "attached", dict(self.attached))

    def __len__(self) -> int:
        return len(self.dicycle)

    def tree(self, v: int) -> OrientedGraph:
        return self.attached[v]

    def rotated(self, start: int) -> "DicycleDecomposition":
        """Same decomposition with ``start`` as the first cycle vertex."""
        i = self.dicycle.index(start)
        return DicycleDecomposition(self.dicycle[i:] + self.dicycle[:i], self.attached)

    def cycle_arcs(self) -> List[Arc]:
        c = self.dicycle
        return [Arc(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


@dataclass(frozen=True)
class ForbiddenWitness:
    """A forbidden pattern found in a host graph.

    ``vertex_map`` sends pattern vertices to host vertices; ``arcs`` are the
    host arcs realising the pattern.
    """

    family: Family
    vertex_map: Mapping[int, int]
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", dict(self.vertex_map))
        object.__setattr__(self, "arcs", tuple(sorted(Arc(*a) for a in self.arcs)))

    def subgraph(self) -> OrientedGraph:
        """The realising arcs as a standalone graph on host labels."""
        return OrientedGraph.from_arcs(self.arcs, vertices=self.vertex_map.values())

    def pattern(self) -> OrientedGraph:
        inverse = {h: p for p, h in self.vertex_map.items()}
        return relabel(self.subgraph(), inverse)

    def format(self) -> str:
        lines = [f"family {self.family.value}"]
        lines += [f"pattern {p} -> host {h}" for p, h in sorted(self.vertex_map.items())]
        lines += [f"arc {a.tail} {a.head}" for a in self.arcs]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


def _cycle_vertices(g: OrientedGraph) -> List[int]:
    """Vertices left after repeatedly stripping underlying leaves."""
    degree = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    leaves = [v for v in alive if degree[v] <= 1]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degree[w] -= 1
                if degree[w] == 1:
                    leaves.append(w)
    return sorted(alive)


def decompose_unidicyclic(g: OrientedGraph) -> DicycleDecomposition:
    if not is_connected(g):
        raise Disconnected("decompose_unidicyclic needs a connected graph")
    cycles = cyclomatic_number(g)
    if cycles == 0:
        raise NoCycle("the underlying graph is a tree")
    if cycles > 1:
        raise MultipleCycles(f"the underlying graph has cyclomatic number {cycles}")
    ring = set(_cycle_vertices(g))
    succ = {}
    for v in ring:
        outs = [w for w in g.out_neighbors(v) if w in ring]
        if len(outs) != 1:
            raise CycleNotDirected("the unique cycle is not a directed cycle")
        succ[v] = outs[0]
    start = min(ring)
    order = [start]
    while succ[order[-1]] != start:
        order.append(succ[order[-1]])
    cycle_arcs = {Arc(v, succ[v]) for v in ring}
    rest = OrientedGraph(g.vertices, g.arcs - cycle_arcs)
    attached = {}
    for comp in components(rest):
        root = next(v for v in order if v in comp.vertices)
        attached[root] = comp
    return DicycleDecomposition(tuple(order), attached)


def is_unidicyclic(g: OrientedGraph) -> bool:
    try:
        decompose_unidicyclic(g)
    except (Disconnected, NoCycle, MultipleCycles, CycleNotDirected):
        return False
    return True


def heavy_vertices(d: DicycleDecomposition) -> List[int]:
    """Cycle vertices whose attached tree is non-trivial, in cycle order."""
    return [v for v in d.dicycle if len(d.attached[v].vertices) > 1]


# ---------------------------------------------------------------------------
# 1-page critical class
# ---------------------------------------------------------------------------


def classify_M1(g: OrientedGraph) -> Optional[Family]:
    """Family of ``g`` within the 1-page critical class, or None if ``g`` is not a member."""
    n, m = len(g.vertices), len(g.arcs)
    if not is_connected(g):
        return None
    if n == 3 and m == 2:
        for v in g.vertices:
            if len(g.out_neighbors(v)) == 2:
                return Family.S_PLUS
            if len(g.in_neighbors(v)) == 2:
                return Family.S_MINUS
        return None
    if n >= 3 and m == n and all(len(g.out_neighbors(v)) == 1 and len(g.in_neighbors(v)) == 1 for v in g.vertices):
        return Family.DICYCLE
    return None


def is_M1(g: OrientedGraph) -> bool:
    return classify_M1(g) is not None


def m1_witness(g: OrientedGraph) -> Optional[ForbiddenWitness]:
    """An S+, S- or dicycle subgraph of ``g``; None iff every component is a dipath."""
    for v in g.sorted_vertices():
        outs = sorted(g.out_neighbors(v))
        if len(outs) >= 2:
            return ForbiddenWitness(Family.S_PLUS, {1: outs[0], 2: v, 3: outs[1]}, [(v, outs[0]), (v, outs[1])])
        ins = sorted(g.in_neighbors(v))
        if len(ins) >= 2:
            return ForbiddenWitness(Family.S_MINUS, {1: ins[0], 2: v, 3: ins[1]}, [(ins[0], v), (ins[1], v)])
    # every vertex now has in- and out-degree <= 1, so a cycle is a dicycle
    seen = set()
    for start in g.sorted_vertices():
        if start in seen:
            continue
        walk = [start]
        while True:
            seen.add(walk[-1])
            outs = list(g.out_neighbors(walk[-1]))
            if not outs:
                break
            if outs[0] == start:
                mapping = {i + 1: v for i, v in enumerate(walk)}
                arcs = [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]
                return ForbiddenWitness(Family.DICYCLE, mapping, arcs)
            if outs[0] in seen:
                break
            walk.append(outs[0])
    return None


# ---------------------------------------------------------------------------
# 2-page critical families
# ---------------------------------------------------------------------------


def _pendant_arc(d: DicycleDecomposition, root: int) -> Tuple[int, Arc]:
    """First arc from ``root`` into its attached tree (smallest neighbour id)."""
    t = d.attached[root]
    leaf = min(t.neighbors(root))
    return leaf, t.arc_between(root, leaf)


def _cycle_map(d: DicycleDecomposition) -> Dict[int, int]:
    return {i + 1: v for i, v in enumerate(d.dicycle)}


def detect_I(d: DicycleDecomposition) -> Optional[ForbiddenWitness]:
    n = len(d.dicycle)
    if n < 4:
        return None
    heavy = set(heavy_vertices(d))
    for i in range(n):
        for j in range(i + 2, n):
            if (j - i) % n in (1, n - 1):
                continue
            x, y = d.dicycle[i], d.dicycle[j]
            if x in heavy and y in heavy:
                mapping = _cycle_map(d)
                arcs = d.cycle_arcs()
                for offset, root in enumerate((x, y), start=1):
                    leaf, arc = _pendant_arc(d, root)
                    mapping[n + offset] = leaf
                    arcs.append(arc)
                return ForbiddenWitness(Family.CLASS_I, mapping, arcs)
    return None


def detect_T(d: DicycleDecomposition) -> Optional[ForbiddenWitness]:
    if len(d.dicycle) != 3 or len(heavy_vertices(d)) != 3:
        return None
    mapping = _cycle_map(d)
    arcs = d.cycle_arcs()
    for offset, root in enumerate(d.dicycle, start=1):
        leaf, arc = _pendant_arc(d, root)
        mapping[3 + offset] = leaf
        arcs.append(arc)
    return ForbiddenWitness(Family.CLASS_T, mapping, arcs)


def rooted_antlers(d: DicycleDecomposition, x: int, y: int) -> Tuple[Optional[AntlerWitness], Optional[AntlerWitness]]:
    """Positive antler rooted at ``x`` in its tree and negative antler rooted at ``y``."""
    pos = recognize_sink_fountain(d.attached[x], x)
    neg = recognize_source_fountain(d.attached[y], y)
    return (
        pos if isinstance(pos, AntlerWitness) else None,
        neg if isinstance(neg, AntlerWitness) else None,
    )


def detect_R(d: DicycleDecomposition) -> Optional[ForbiddenWitness]:
    n = len(d.dicycle)
    heavy = set(heavy_vertices(d))
    for i in range(n):
        x, y = d.dicycle[i], d.dicycle[(i + 1) % n]
        if x not in heavy or y not in heavy:
            continue
        pos, neg = rooted_antlers(d, x, y)
        if pos is None or neg is None:
            continue
        # pattern labels follow families.r_graph: cycle 1..n from x, then the
        # positive antler's inner dipath and tips, then the negative one's
        mapping = {p + 1: d.dicycle[(i + p) % n] for p in range(n)}
        label = n + 1
        for antler in (pos, neg):
            for v in antler.dipath[1:] + antler.tips:
                mapping[label] = v
                label += 1
        arcs = d.cycle_arcs() + list(pos.arcs()) + list(neg.arcs())
        return ForbiddenWitness(Family.CLASS_R, mapping, arcs)
    return None


def detect_forbidden(d: DicycleDecomposition) -> Optional[ForbiddenWitness]:
    """First of class T, I, R found in the decomposition, else None."""
    return detect_T(d) or detect_I(d) or detect_R(d)


def witness_graph(g: OrientedGraph, w: ForbiddenWitness) -> OrientedGraph:
    """The witness arcs checked against the host and extracted as a subgraph."""
    missing = set(w.arcs) - g.arcs
    if missing:
        raise ValueError(f"witness arcs {sorted(missing)} are not in the host graph")
    sub = subgraph(g, w.vertex_map.values())
    return OrientedGraph(sub.vertices, frozenset(w.arcs))
