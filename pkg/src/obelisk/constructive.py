"""Polynomial-time 1-page embedders for cycles, trees, fountain trees and
strictly uni-dicyclic graphs.

Every function returns a :class:`BookEmbedding` with the spine listed
bottom-to-top. Tree embeddings put every arc in page 0 pointing upward.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

from .errors import NotACycle, NotASink, NotATree, UnknownVertex, WrongShape
from .fountain import (
    SINK,
    AntlerWitness,
    FountainSpec,
    recognize_sink_fountain,
    validate_fountain,
)
from .graph import Arc, OrientedGraph, Shape, classify_shape, components, converse, cycle_sequence, delete_vertex, is_tree
from .layout import SPINE, BookEmbedding, reverse_converse
from .recognizers import (
    DicycleDecomposition,
    ForbiddenWitness,
    decompose_unidicyclic,
    detect_forbidden,
    heavy_vertices,
    rooted_antlers,
)


class OrderKind(str, enum.Enum):
    SINK = "SinkOrder"
    SOURCE = "SourceOrder"
    SINK_FOUNTAIN = "SinkFountainOrder"
    SOURCE_FOUNTAIN = "SourceFountainOrder"
    OTSO = "OtsoOrder"


@dataclass(frozen=True)
class SpineOrderLabel:
    """A named spine order. ``order`` is listed top-to-bottom, so for sink and
    fountain orders the root comes first."""

    kind: OrderKind
    root: int
    order: Tuple[int, ...]

    def bottom_to_top(self) -> Tuple[int, ...]:
        return tuple(reversed(self.order))


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------


def embed_oriented_cycle(g: OrientedGraph) -> BookEmbedding:
    """One page: the arc closing the natural ordering goes in the page together
    with every arc pointing the same way; the others are tight."""
    try:
        shape = classify_shape(g)
    except ValueError:
        raise NotACycle("graph is not connected") from None
    if shape not in (Shape.DICYCLE, Shape.ORIENTED_CYCLE):
        raise NotACycle(f"graph is a {shape.value}, not a cycle")
    spine = cycle_sequence(g)
    pos = {v: i for i, v in enumerate(spine)}
    closing = g.arc_between(spine[0], spine[-1])
    closing_up = pos[closing.tail] < pos[closing.head]
    placement = {}
    for a in g.arcs:
        placement[a] = 0 if (pos[a.tail] < pos[a.head]) == closing_up else SPINE
    return BookEmbedding(tuple(spine), placement, 1)


# ---------------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------------


def _require_tree(t: OrientedGraph, root: int) -> None:
    if root not in t.vertices:
        raise UnknownVertex(f"vertex {root} not in tree")
    if not is_tree(t):
        raise NotATree("expected an oriented tree")


def _otso(t: OrientedGraph, root: int) -> List[int]:
    """Bottom-to-top order with ``root`` uncovered and every arc upward.

    Subtrees hanging off out-arcs of the root are stacked above it, those
    hanging off in-arcs below it; siblings nearest the root have the smallest id.
    """
    # iterative post-order so deep paths do not hit the recursion limit
    parent = {root: None}
    visit = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in sorted(t.neighbors(u)):
            if w not in parent:
                parent[w] = u
                visit.append(w)
                stack.append(w)
    block: Dict[int, List[int]] = {}
    for u in reversed(visit):
        children = sorted(w for w in t.neighbors(u) if parent.get(w) == u and w != parent[u])
        below = [c for c in children if t.has_arc(c, u)]
        above = [c for c in children if t.has_arc(u, c)]
        order: List[int] = []
        for c in reversed(below):
            order += block.pop(c)
        order.append(u)
        for c in above:
            order += block.pop(c)
        block[u] = order
    return block[root]


def otso_spine_order(t: OrientedGraph, root: int) -> SpineOrderLabel:
    _require_tree(t, root)
    return SpineOrderLabel(OrderKind.OTSO, root, tuple(reversed(_otso(t, root))))


def embed_tree_loose(t: OrientedGraph, root: int) -> BookEmbedding:
    """All arcs in one upward page, no tight arcs, nothing covers ``root``.

    The page is declared even for a single vertex; empty pages are legal.
    """
    _require_tree(t, root)
    return BookEmbedding(tuple(_otso(t, root)), {a: 0 for a in t.arcs}, 1)


def _sink_order(t: OrientedGraph, x: int) -> List[int]:
    rest = delete_vertex(t, x)
    blocks = []
    for v in sorted(t.in_neighbors(x)):
        sub = next(c for c in components(rest) if v in c.vertices)
        blocks.append(_otso(sub, v))
    order: List[int] = []
    for b in reversed(blocks):
        order += b
    order.append(x)
    return order


def sink_spine_order(t: OrientedGraph, x: int) -> SpineOrderLabel:
    _require_tree(t, x)
    if not t.is_sink(x):
        raise NotASink(f"{x} has out-neighbours {sorted(t.out_neighbors(x))}")
    return SpineOrderLabel(OrderKind.SINK, x, tuple(reversed(_sink_order(t, x))))


def embed_tree_sink(t: OrientedGraph, x: int) -> BookEmbedding:
    """Sink ``x`` on top; each in-neighbour's subtree embedded loose below it,
    nearest first in ascending id, all arcs in one upward page."""
    label = sink_spine_order(t, x)
    return BookEmbedding(label.bottom_to_top(), {a: 0 for a in t.arcs}, 1)


def embed_tree_source(t: OrientedGraph, x: int) -> BookEmbedding:
    _require_tree(t, x)
    if not t.is_source(x):
        raise NotASink(f"{x} is not a source (in-neighbours {sorted(t.in_neighbors(x))})")
    return reverse_converse(embed_tree_sink(converse(t), x))


# ---------------------------------------------------------------------------
# Fountain trees
# ---------------------------------------------------------------------------


def embed_fountain(spec: FountainSpec) -> BookEmbedding:
    """Spine top-to-bottom ``x1..xn`` then the sink blocks of ``xn`` down to
    ``x1``; dipath arcs tight and downward, tree arcs in page 0 upward."""
    validate_fountain(spec)
    if spec.kind != SINK:
        return reverse_converse(embed_fountain(spec.converse()))
    path = spec.spine_path
    spine: List[int] = []
    for x in path:
        spine += _sink_order(spec.attached[x], x)[:-1]
    spine += list(reversed(path))
    placement: Dict[Arc, int] = {a: SPINE for a in spec.path_arcs()}
    for t in spec.attached.values():
        placement.update({a: 0 for a in t.arcs})
    return BookEmbedding(tuple(spine), placement, 1)


def fountain_spine_order(spec: FountainSpec) -> SpineOrderLabel:
    emb = embed_fountain(spec)
    kind = OrderKind.SINK_FOUNTAIN if spec.kind == SINK else OrderKind.SOURCE_FOUNTAIN
    order = tuple(reversed(emb.spine)) if spec.kind == SINK else emb.spine
    return SpineOrderLabel(kind, spec.spine_path[0], order)


# ---------------------------------------------------------------------------
# Strictly uni-dicyclic graphs
# ---------------------------------------------------------------------------


def _one_heavy_layout(d: DicycleDecomposition) -> Tuple[List[int], Dict[Arc, int]]:
    """Tree at ``d.dicycle[0]`` embedded loose, the rest of the cycle inserted
    directly below its root as a downward tight dipath, the closing arc in page 0."""
    cycle = d.dicycle
    root = cycle[0]
    spine = _otso(d.attached[root], root)
    i = spine.index(root)
    spine[i:i] = list(reversed(cycle[1:]))
    placement: Dict[Arc, int] = {a: 0 for a in d.attached[root].arcs}
    for a in d.cycle_arcs():
        placement[a] = 0 if a.head == root else SPINE
    return spine, placement


def embed_unidicyclic_one_heavy(g: OrientedGraph, d: DicycleDecomposition) -> BookEmbedding:
    heavy = heavy_vertices(d)
    if not heavy:
        return embed_oriented_cycle(g)
    if len(heavy) > 1:
        raise WrongShape(f"expected at most one heavy vertex, found {heavy}")
    spine, placement = _one_heavy_layout(d.rotated(heavy[0]))
    return BookEmbedding(tuple(spine), placement, 1)


def _embed_tail_side(d: DicycleDecomposition, x: int, y: int) -> BookEmbedding:
    """Two heavy vertices joined by cycle arc ``(x, y)`` where the tree at
    ``x`` has no positive antler rooted at ``x``."""
    spec = recognize_sink_fountain(d.attached[x], x)
    assert not isinstance(spec, AntlerWitness)
    spine, placement = _one_heavy_layout(d.rotated(y))
    fountain = embed_fountain(spec)
    below_x = list(fountain.spine[:-1])
    i = spine.index(x)
    spine[i:i] = below_x
    placement.update(fountain.placement)
    return BookEmbedding(tuple(spine), placement, 1)


def embed_unidicyclic(g: OrientedGraph) -> Union[BookEmbedding, ForbiddenWitness]:
    """A 1-page embedding, or the class T / I / R witness that rules one out."""
    d = decompose_unidicyclic(g)
    witness = detect_forbidden(d)
    if witness is not None:
        return witness
    heavy = heavy_vertices(d)
    if len(heavy) <= 1:
        return embed_unidicyclic_one_heavy(g, d)
    # no class T or I member: exactly two heavy vertices, adjacent on the cycle
    a, b = heavy
    arc = g.arc_between(a, b)
    x, y = arc.tail, arc.head
    pos, neg = rooted_antlers(d, x, y)
    if pos is None:
        return _embed_tail_side(d, x, y)
    assert neg is None
    d_conv = DicycleDecomposition(tuple(reversed(d.dicycle)), {v: converse(t) for v, t in d.attached.items()})
    return reverse_converse(_embed_tail_side(d_conv, y, x))
