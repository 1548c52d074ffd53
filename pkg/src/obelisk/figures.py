"""Matplotlib drawings of book embeddings, written to image files."""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc as ArcPatch  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .graph import OrientedGraph  # noqa: E402
from .layout import SPINE, BookEmbedding  # noqa: E402
from .render import PAGE_COLORS, nesting_heights  # noqa: E402


def draw_embedding(g: OrientedGraph, emb: BookEmbedding, ax=None, title: Optional[str] = None):
    """Draw ``emb`` on ``ax`` (a new axes when None) and return the axes.

    Same picture as the SVG emitter: vertical spine, pages as half-ellipses
    alternating right and left.
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(3, max(2.5, 0.5 * len(emb.spine))))
    pos = emb.positions
    by_page = {}
    for a in sorted(emb.placement):
        p = emb.placement[a]
        if p != SPINE:
            by_page.setdefault(p, []).append(a)

    n = len(emb.spine)
    ax.plot([0, 0], [-0.5, max(n - 0.5, 0.5)], color="0.75", lw=1, zorder=0)
    for a in emb.tight_arcs():
        ax.add_patch(
            FancyArrowPatch((0, pos[a.tail]), (0, pos[a.head]), arrowstyle="-|>", mutation_scale=10, lw=1.8, color="k", shrinkA=4, shrinkB=4)
        )
    widest = 0.0
    for p, arcs in sorted(by_page.items()):
        color = PAGE_COLORS[p % len(PAGE_COLORS)]
        side = 1 if p % 2 == 0 else -1
        heights = nesting_heights(arcs, pos)
        for a in arcs:
            lo, hi = sorted((pos[a.tail], pos[a.head]))
            width = 0.45 * (heights[a] + 1) * (1 + 0.15 * (p // 2))
            widest = max(widest, width)
            theta = (-90, 90) if side == 1 else (90, 270)
            ax.add_patch(ArcPatch((0, (lo + hi) / 2), 2 * width, hi - lo, theta1=theta[0], theta2=theta[1], color=color, lw=1.4))
            # arrowhead at the head end, tangent to the spine
            y_head = pos[a.head]
            dy = -0.08 if pos[a.head] > pos[a.tail] else 0.08
            ax.annotate("", xy=(0.02 * side, y_head), xytext=(0.12 * side, y_head + dy),
                        arrowprops=dict(arrowstyle="-|>", color=color, lw=1.2))
    ax.scatter([0] * n, list(range(n)), s=22, color="k", zorder=3)
    label_x, ha = (widest + 0.12, "left") if 1 in by_page else (-0.12, "right")
    for v in emb.spine:
        ax.text(label_x, pos[v], str(v), ha=ha, va="center", fontsize=9)
    ax.set_xlim(-widest - 0.4, widest + 0.4)
    ax.set_ylim(-0.8, max(n - 0.2, 0.8))
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    return ax


def save_embedding_figure(g: OrientedGraph, emb: BookEmbedding, path: str, title: Optional[str] = None) -> str:
    fig, ax = plt.subplots(figsize=(3, max(2.5, 0.5 * len(emb.spine))))
    draw_embedding(g, emb, ax, title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_gallery(items: Sequence[Tuple[OrientedGraph, BookEmbedding, str]], path: str, columns: int = 4) -> str:
    """Grid of embeddings with captions; used for mined critical graphs."""
    count = max(len(items), 1)
    cols = min(columns, count)
    rows = (count + cols - 1) // cols
    tallest = max((len(e.spine) for _, e, _ in items), default=2)
    fig, axes = plt.subplots(rows, cols, figsize=(2.6 * cols, max(2.2, 0.45 * tallest) * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, (g, emb, caption) in zip(axes.flat, items):
        draw_embedding(g, emb, ax, caption)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
