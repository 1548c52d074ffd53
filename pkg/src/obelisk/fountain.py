"""Fountain trees and rooted antlers.

A sink fountain tree is a dipath ``x1 -> ... -> xn`` where each ``xi`` carries
an attached tree in which it is a sink. Walking the unique out-arcs from the
root either reaches a vertex of out-degree zero (the tree is a sink fountain
with that walk as its dipath) or a vertex with two out-arcs, which together
with the walk forms a positive antler rooted at the start. The source
variants are the converses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

from .errors import BadSpec, NotATree, UnknownVertex
from .graph import Arc, OrientedGraph, components, converse, is_tree, union

POSITIVE = "positive"
NEGATIVE = "negative"
SINK = "sink"
SOURCE = "source"


@dataclass(frozen=True)
class AntlerWitness:
    """A ``j``-antler rooted at ``dipath[0]``.

    ``dipath`` lists the ``j`` dipath vertices starting at the root and ends at
    ``branch_vertex``. For a positive antler the arcs run away from the root
    and the tips are out-neighbours of the branch vertex; for a negative one
    every arc is reversed.
    """

    sign: str
    j: int
    dipath: Tuple[int, ...]
    branch_vertex: int
    tips: Tuple[int, int]

    def arcs(self) -> Tuple[Arc, ...]:
        fwd = self.sign == POSITIVE
        out = []
        for a, b in zip(self.dipath, self.dipath[1:]):
            out.append(Arc(a, b) if fwd else Arc(b, a))
        for tip in self.tips:
            out.append(Arc(self.branch_vertex, tip) if fwd else Arc(tip, self.branch_vertex))
        return tuple(out)


@dataclass(frozen=True)
class FountainSpec:
    """Dipath plus one attached tree per dipath vertex.

    For ``kind == "sink"`` the dipath arcs are ``(x_i, x_{i+1})`` and ``x_i`` is
    a sink of its attached tree; ``"source"`` reverses both.
    """

    spine_path: Tuple[int, ...]
    attached: Mapping[int, OrientedGraph]
    kind: str = SINK

    def __post_init__(self):
        object.__setattr__(self, "spine_path", tuple(self.spine_path))
        object.__setattr__(self, "attached", dict(self.attached))

    def path_arcs(self) -> Tuple[Arc, ...]:
        pairs = zip(self.spine_path, self.spine_path[1:])
        if self.kind == SINK:
            return tuple(Arc(a, b) for a, b in pairs)
        return tuple(Arc(b, a) for a, b in pairs)

    def converse(self) -> "FountainSpec":
        other = SOURCE if self.kind == SINK else SINK
        return FountainSpec(self.spine_path, {x: converse(t) for x, t in self.attached.items()}, other)


def validate_fountain(spec: FountainSpec) -> None:
    if spec.kind not in (SINK, SOURCE):
        raise BadSpec(f"unknown fountain kind {spec.kind!r}")
    path = spec.spine_path
    if not path:
        raise BadSpec("empty dipath")
    if len(set(path)) != len(path):
        raise BadSpec("dipath repeats a vertex")
    if set(spec.attached) != set(path):
        raise BadSpec("attached trees must be keyed by exactly the dipath vertices")
    seen: Dict[int, int] = {}
    for x in path:
        t = spec.attached[x]
        if x not in t.vertices:
            raise BadSpec(f"attached tree of {x} does not contain {x}")
        if not is_tree(t):
            raise BadSpec(f"attached graph at {x} is not an oriented tree")
        root_ok = t.is_sink(x) if spec.kind == SINK else t.is_source(x)
        if not root_ok:
            raise BadSpec(f"{x} is not a {spec.kind} of its attached tree")
        for v in t.vertices:
            if v in seen:
                raise BadSpec(f"vertex {v} appears in the trees of {seen[v]} and {x}")
            seen[v] = x


def build_fountain_tree(spec: FountainSpec) -> OrientedGraph:
    validate_fountain(spec)
    path = OrientedGraph.from_arcs(spec.path_arcs(), vertices=spec.spine_path)
    return union(path, *spec.attached.values())


def _walk(t: OrientedGraph, x: int, forward: bool):
    step = t.out_neighbors if forward else t.in_neighbors
    path = [x]
    while True:
        nxt = sorted(step(path[-1]))
        if len(nxt) >= 2:
            sign = POSITIVE if forward else NEGATIVE
            return AntlerWitness(sign, len(path), tuple(path), path[-1], (nxt[0], nxt[1]))
        if not nxt:
            return tuple(path)
        path.append(nxt[0])


def _recognize(t: OrientedGraph, x: int, forward: bool) -> Union[FountainSpec, AntlerWitness]:
    if x not in t.vertices:
        raise UnknownVertex(f"vertex {x} not in tree")
    if not is_tree(t):
        raise NotATree("fountain recognition needs an oriented tree")
    walked = _walk(t, x, forward)
    if isinstance(walked, AntlerWitness):
        return walked
    path = walked
    path_arcs = {t.arc_between(a, b) for a, b in zip(path, path[1:])}
    rest = OrientedGraph(t.vertices, t.arcs - path_arcs)
    attached = {}
    for comp in components(rest):
        root = next(v for v in path if v in comp.vertices)
        attached[root] = comp
    return FountainSpec(path, attached, SINK if forward else SOURCE)


def recognize_sink_fountain(t: OrientedGraph, x: int) -> Union[FountainSpec, AntlerWitness]:
    """Sink-fountain decomposition rooted at ``x``, or a positive antler rooted at ``x``."""
    return _recognize(t, x, forward=True)


def recognize_source_fountain(t: OrientedGraph, x: int) -> Union[FountainSpec, AntlerWitness]:
    return _recognize(t, x, forward=False)
