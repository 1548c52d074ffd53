"""Reproducible random instances.

All randomness flows through :class:`SplitMix64` so that a seed yields the
same graph on every platform and Python version.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .families import dicycle
from .fountain import FountainSpec, build_fountain_tree
from .graph import OrientedGraph, relabel

MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014).

    state += 0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def coin(self) -> bool:
        return bool(self.next_u64() >> 63)

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def _scramble(rng: SplitMix64, g: OrientedGraph) -> OrientedGraph:
    """Relabel onto ``1..n`` with a random permutation."""
    vs = g.sorted_vertices()
    targets = rng.shuffle(list(range(1, len(vs) + 1)))
    return relabel(g, dict(zip(vs, targets)))


def random_tree(rng: SplitMix64, n: int, scramble: bool = True) -> OrientedGraph:
    """Random oriented tree on ``1..n``: each new vertex hangs off a uniformly
    chosen earlier one with a fair-coin direction."""
    arcs = []
    for v in range(2, n + 1):
        u = rng.between(1, v - 1)
        arcs.append((u, v) if rng.coin() else (v, u))
    g = OrientedGraph.from_arcs(arcs, vertices=range(1, n + 1))
    return _scramble(rng, g) if scramble else g


def random_sink_tree(rng: SplitMix64, labels: Sequence[int]) -> OrientedGraph:
    """Random oriented tree on ``labels`` in which ``labels[0]`` is a sink."""
    root = labels[0]
    arcs = []
    for i in range(1, len(labels)):
        v = labels[i]
        u = labels[rng.below(i)]
        if u == root or not rng.coin():
            arcs.append((v, u))
        else:
            arcs.append((u, v))
    return OrientedGraph.from_arcs(arcs, vertices=labels)


def random_fountain_spec(rng: SplitMix64, max_path: int = 4, max_tree: int = 5) -> FountainSpec:
    """Sink fountain spec with a random dipath and random sink trees; vertex ids
    are a random permutation of ``1..total``."""
    length = rng.between(1, max_path)
    sizes = [rng.between(1, max_tree) for _ in range(length)]
    ids = rng.shuffle(list(range(1, sum(sizes) + 1)))
    path: List[int] = []
    attached: Dict[int, OrientedGraph] = {}
    cursor = 0
    for size in sizes:
        labels = ids[cursor:cursor + size]
        cursor += size
        path.append(labels[0])
        attached[labels[0]] = random_sink_tree(rng, labels)
    return FountainSpec(tuple(path), attached)


def random_oriented_cycle(rng: SplitMix64, n: int) -> OrientedGraph:
    arcs = []
    for i in range(1, n + 1):
        j = i % n + 1
        arcs.append((i, j) if rng.coin() else (j, i))
    return _scramble(rng, OrientedGraph.from_arcs(arcs))


def random_unidicyclic(rng: SplitMix64, n: int, cycle_length: Optional[int] = None) -> OrientedGraph:
    """Dicycle of random length in ``[3, n]`` grown to ``n`` vertices by random
    pendant arcs."""
    c = cycle_length if cycle_length is not None else rng.between(3, n)
    arcs = [tuple(a) for a in dicycle(c).sorted_arcs()]
    for v in range(c + 1, n + 1):
        u = rng.between(1, v - 1)
        arcs.append((u, v) if rng.coin() else (v, u))
    return _scramble(rng, OrientedGraph.from_arcs(arcs))


SHAPES = ("tree", "cycle", "dicycle", "unidicyclic", "fountain")


def generate(shape: str, n: int, seed: int) -> OrientedGraph:
    """Random instance of ``shape``; for ``fountain`` ``n`` bounds the dipath
    length and the attached tree sizes."""
    rng = SplitMix64(seed)
    if shape == "tree":
        return random_tree(rng, n)
    if shape == "cycle":
        return random_oriented_cycle(rng, n)
    if shape == "dicycle":
        return _scramble(rng, dicycle(n))
    if shape == "unidicyclic":
        return random_unidicyclic(rng, n)
    if shape == "fountain":
        return build_fountain_tree(random_fountain_spec(rng, max_path=n, max_tree=n))
    raise ValueError(f"unknown shape {shape!r}; choose from {', '.join(SHAPES)}")

