"""Oriented book embeddings: data model, file format, and the exact verifier.

Conventions: the spine is listed bottom-to-top, so position 0 is the lowest
vertex. An arc is *upward* when its tail sits below its head. Placement is
either ``SPINE`` (a tight arc) or a 0-based page index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import GraphSyntaxError, InvalidEmbedding, UnknownVertex
from .graph import Arc, OrientedGraph

SPINE = -1


@dataclass(frozen=True)
class BookEmbedding:
    spine: Tuple[int, ...]
    placement: Mapping[Arc, int]
    pages: int

    def __post_init__(self):
        object.__setattr__(self, "spine", tuple(self.spine))
        object.__setattr__(self, "placement", {Arc(*a): int(p) for a, p in self.placement.items()})
        if self.pages < 0:
            raise InvalidEmbedding("page count must be non-negative")
        for a, p in self.placement.items():
            if p != SPINE and not 0 <= p < self.pages:
                raise InvalidEmbedding(f"arc {tuple(a)} placed on page {p} of a {self.pages}-page book")

    @property
    def positions(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.spine)}

    def tight_arcs(self) -> List[Arc]:
        return sorted(a for a, p in self.placement.items() if p == SPINE)

    def page_arcs(self, page: int) -> List[Arc]:
        return sorted(a for a, p in self.placement.items() if p == page)

    def loose_arcs(self) -> List[Arc]:
        return sorted(a for a, p in self.placement.items() if p != SPINE)


def spine_position(emb: BookEmbedding, v: int) -> int:
    try:
        return emb.spine.index(v)
    except ValueError:
        raise UnknownVertex(f"vertex {v} not on the spine") from None


def is_upward(a: Arc, pos: Mapping[int, int]) -> bool:
    return pos[a.tail] < pos[a.head]


def covers(a: Arc, v: int, pos: Mapping[int, int]) -> bool:
    lo, hi = sorted((pos[a.tail], pos[a.head]))
    return lo < pos[v] < hi


def _interleave(a1: Arc, a2: Arc, pos: Mapping[int, int]) -> bool:
    i, j = sorted((pos[a1.tail], pos[a1.head]))
    l, m = sorted((pos[a2.tail], pos[a2.head]))
    if len({i, j, l, m}) < 4:
        return False
    return i < l < j < m or l < i < m < j


def arcs_cross(a1: Tuple[int, int], a2: Tuple[int, int], emb: BookEmbedding) -> bool:
    """True iff the two arcs strictly interleave on the spine.

    Arcs sharing an endpoint never cross.
    """
    return _interleave(Arc(*a1), Arc(*a2), emb.positions)


class Rule(str, enum.Enum):
    BAD_SPINE = "BadSpine"
    UNPLACED_ARC = "UnplacedArc"
    TIGHT_NON_CONSECUTIVE = "TightNonConsecutive"
    SPINE_DIRECTION_CLASH = "SpineDirectionClash"
    PAGE_DIRECTION_CLASH = "PageDirectionClash"
    PLANARITY_VIOLATION = "PlanarityViolation"


@dataclass(frozen=True)
class Violation:
    rule: Rule
    arcs: Tuple[Arc, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class ValidityReport:
    violations: Tuple[Violation, ...] = field(default_factory=tuple)
    pages: int = 0

    @property
    def valid(self) -> bool:
        return not self.violations

    def rules(self) -> List[Rule]:
        return [v.rule for v in self.violations]

    def __str__(self) -> str:
        if self.valid:
            return f"valid, {self.pages} page{'s' if self.pages != 1 else ''}"
        lines = [f"invalid, {len(self.violations)} violation(s)"]
        for v in self.violations:
            arcs = " ".join(f"({a.tail},{a.head})" for a in v.arcs)
            lines.append(f"  {v.rule.value}: {arcs} {v.detail}".rstrip())
        return "\n".join(lines)


def _direction_clash(arcs: Sequence[Arc], pos: Mapping[int, int]) -> List[Arc]:
    """Arcs whose direction disagrees with the majority (ties blame downward arcs)."""
    up = [a for a in arcs if is_upward(a, pos)]
    down = [a for a in arcs if not is_upward(a, pos)]
    if not up or not down:
        return []
    return sorted(up if len(up) < len(down) else down)


def verify(g: OrientedGraph, emb: BookEmbedding) -> ValidityReport:
    """Check every rule of an oriented book embedding and report all violations."""
    out: List[Violation] = []

    spine = emb.spine
    if len(set(spine)) != len(spine) or set(spine) != set(g.vertices):
        missing = sorted(g.vertices - set(spine))
        extra = sorted(set(spine) - g.vertices)
        dupes = sorted({v for v in spine if spine.count(v) > 1})
        out.append(Violation(Rule.BAD_SPINE, detail=f"missing={missing} extra={extra} repeated={dupes}"))
    pos = {v: i for i, v in enumerate(spine) if v in g.vertices}

    unplaced = sorted(g.arcs - emb.placement.keys())
    foreign = sorted(emb.placement.keys() - g.arcs)
    if unplaced or foreign:
        detail = f"not in graph: {[tuple(a) for a in foreign]}" if foreign else ""
        out.append(Violation(Rule.UNPLACED_ARC, tuple(unplaced + foreign), detail))

    placed = [a for a in sorted(g.arcs & emb.placement.keys()) if a.tail in pos and a.head in pos]
    tight = [a for a in placed if emb.placement[a] == SPINE]

    far = [a for a in tight if abs(pos[a.tail] - pos[a.head]) != 1]
    if far:
        out.append(Violation(Rule.TIGHT_NON_CONSECUTIVE, tuple(far)))

    clash = _direction_clash(tight, pos)
    if clash:
        out.append(Violation(Rule.SPINE_DIRECTION_CLASH, tuple(clash)))

    by_page: Dict[int, List[Arc]] = {}
    for a in placed:
        if emb.placement[a] != SPINE:
            by_page.setdefault(emb.placement[a], []).append(a)

    for page in sorted(by_page):
        clash = _direction_clash(by_page[page], pos)
        if clash:
            out.append(Violation(Rule.PAGE_DIRECTION_CLASH, tuple(clash), f"page {page}"))

    for page in sorted(by_page):
        arcs = by_page[page]
        crossing = set()
        for i, a1 in enumerate(arcs):
            for a2 in arcs[i + 1:]:
                if _interleave(a1, a2, pos):
                    crossing.update((a1, a2))
        if crossing:
            out.append(Violation(Rule.PLANARITY_VIOLATION, tuple(sorted(crossing)), f"page {page}"))

    return ValidityReport(tuple(out), emb.pages)


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------


def without_arc(emb: BookEmbedding, a: Tuple[int, int]) -> BookEmbedding:
    placement = dict(emb.placement)
    placement.pop(Arc(*a), None)
    return BookEmbedding(emb.spine, placement, emb.pages)


def reverse_converse(emb: BookEmbedding) -> BookEmbedding:
    """Embedding of the converse graph: reversed spine, every arc reversed.

    Directions relative to the spine are preserved, so validity and page
    count carry over.
    """
    return BookEmbedding(
        tuple(reversed(emb.spine)),
        {a.reversed(): p for a, p in emb.placement.items()},
        emb.pages,
    )


def concatenate(embeddings: Iterable[BookEmbedding]) -> BookEmbedding:
    """Stack embeddings of disjoint graphs along one spine, sharing pages."""
    spine: List[int] = []
    placement: Dict[Arc, int] = {}
    pages = 0
    for emb in embeddings:
        spine.extend(emb.spine)
        placement.update(emb.placement)
        pages = max(pages, emb.pages)
    return BookEmbedding(tuple(spine), placement, pages)


def used_pages(emb: BookEmbedding) -> int:
    return len({p for p in emb.placement.values() if p != SPINE})


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------


def parse_embedding(text: str) -> BookEmbedding:
    spine = None
    pages = None
    placement: Dict[Arc, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        try:
            if kind == "spine":
                if spine is not None:
                    raise GraphSyntaxError("spine declared twice", line_no)
                spine = tuple(int(t) for t in args)
            elif kind == "pages":
                if len(args) != 1:
                    raise GraphSyntaxError("pages record takes one integer", line_no)
                pages = int(args[0])
            elif kind == "place":
                if len(args) == 3 and args[2] == "spine":
                    where = SPINE
                elif len(args) == 4 and args[2] == "page":
                    where = int(args[3])
                    if where < 0:
                        raise GraphSyntaxError("page index must be non-negative", line_no)
                else:
                    raise GraphSyntaxError("expected 'place <tail> <head> spine|page <i>'", line_no)
                arc = Arc(int(args[0]), int(args[1]))
                if arc in placement:
                    raise GraphSyntaxError(f"arc {tuple(arc)} placed twice", line_no)
                placement[arc] = where
            else:
                raise GraphSyntaxError(f"unknown record type {kind!r}", line_no)
        except ValueError as exc:
            if isinstance(exc, GraphSyntaxError):
                raise
            raise GraphSyntaxError(str(exc), line_no) from None
    if spine is None:
        raise GraphSyntaxError("missing spine record")
    if pages is None:
        pages = max((p + 1 for p in placement.values() if p != SPINE), default=0)
    try:
        return BookEmbedding(spine, placement, pages)
    except InvalidEmbedding as exc:
        raise GraphSyntaxError(str(exc)) from None


def format_embedding(emb: BookEmbedding) -> str:
    lines = ["spine " + " ".join(str(v) for v in emb.spine), f"pages {emb.pages}"]
    for a in sorted(emb.placement):
        p = emb.placement[a]
        where = "spine" if p == SPINE else f"page {p}"
        lines.append(f"place {a.tail} {a.head} {where}")
    return "\n".join(lines) + "\n"
