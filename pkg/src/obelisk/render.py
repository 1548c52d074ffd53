"""Deterministic SVG drawing of an oriented book embedding.

The spine is a vertical line with the bottom vertex at the bottom of the
picture. Tight arcs are arrows along the line; page ``p`` arcs are half-ellipses
on the right (even ``p``) or left (odd ``p``) whose width grows with nesting
height, so nested arcs never overlap.
"""

from __future__ import annotations

from typing import Dict, List

from .errors import InvalidEmbedding
from .graph import Arc, OrientedGraph
from .layout import SPINE, BookEmbedding, verify

PAGE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")

STEP = 40.0  # vertical distance between spine vertices
WIDTH_STEP = 18.0  # horizontal growth per nesting level
MARGIN = 30.0


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def nesting_heights(arcs: List[Arc], pos: Dict[int, int]) -> Dict[Arc, int]:
    """Height of each arc in the containment forest of one page (innermost = 0)."""
    spans = {a: tuple(sorted((pos[a.tail], pos[a.head]))) for a in arcs}
    order = sorted(arcs, key=lambda a: spans[a][1] - spans[a][0])
    height: Dict[Arc, int] = {}
    for a in order:
        lo, hi = spans[a]
        inner = [height[b] for b in height if lo <= spans[b][0] and spans[b][1] <= hi]
        height[a] = 1 + max(inner) if inner else 0
    return height


def render_svg(g: OrientedGraph, emb: BookEmbedding) -> str:
    report = verify(g, emb)
    if not report.valid:
        raise InvalidEmbedding(str(report))

    pos = emb.positions
    n = len(emb.spine)
    by_page: Dict[int, List[Arc]] = {}
    for a in sorted(emb.placement):
        p = emb.placement[a]
        if p != SPINE:
            by_page.setdefault(p, []).append(a)
    heights = {p: nesting_heights(arcs, pos) for p, arcs in by_page.items()}
    max_h = max((h for hs in heights.values() for h in hs.values()), default=-1)

    half_width = WIDTH_STEP * (max_h + 2)
    cx = MARGIN + half_width
    width = 2 * cx
    height = 2 * MARGIN + STEP * max(n - 1, 0)

    def y(v: int) -> float:
        return height - MARGIN - STEP * pos[v]

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        "<defs>",
    ]
    for key, color in [("spine", "#000000")] + [(str(p), PAGE_COLORS[p % len(PAGE_COLORS)]) for p in sorted(by_page)]:
        out.append(
            f'<marker id="head-{key}" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" '
            f'markerHeight="6" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="{color}"/></marker>'
        )
    out.append("</defs>")
    if n:
        out.append(
            f'<line class="spine" x1="{_fmt(cx)}" y1="{_fmt(MARGIN - 10)}" x2="{_fmt(cx)}" '
            f'y2="{_fmt(height - MARGIN + 10)}" stroke="#bbbbbb" stroke-width="1"/>'
        )

    for a in emb.tight_arcs():
        y1, y2 = y(a.tail), y(a.head)
        shrink = 6.0 if y2 > y1 else -6.0
        out.append(
            f'<path class="tight" d="M {_fmt(cx)} {_fmt(y1)} L {_fmt(cx)} {_fmt(y2 - shrink)}" '
            f'stroke="#000000" stroke-width="2" fill="none" marker-end="url(#head-spine)"/>'
        )

    for p in sorted(by_page):
        color = PAGE_COLORS[p % len(PAGE_COLORS)]
        side = 1 if p % 2 == 0 else -1
        for a in by_page[p]:
            y1, y2 = y(a.tail), y(a.head)
            rx = WIDTH_STEP * (heights[p][a] + 1) * (1 + 0.15 * (p // 2))
            ry = abs(y2 - y1) / 2
            # sweep picks the half of the ellipse on this page's side
            going_up = y2 < y1
            sweep = 1 if going_up == (side == 1) else 0
            out.append(
                f'<path class="loose" data-page="{p}" d="M {_fmt(cx)} {_fmt(y1)} A {_fmt(rx)} {_fmt(ry)} 0 0 {sweep} '
                f'{_fmt(cx)} {_fmt(y2)}" stroke="{color}" stroke-width="1.5" fill="none" marker-end="url(#head-{p})"/>'
            )

    for v in emb.spine:
        out.append(f'<circle class="vertex" cx="{_fmt(cx)}" cy="{_fmt(y(v))}" r="4" fill="#000000"/>')
        out.append(
            f'<text x="{_fmt(cx - 10)}" y="{_fmt(y(v) + 4)}" font-family="sans-serif" font-size="12" '
            f'text-anchor="end">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
