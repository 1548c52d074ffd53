"""Exact oriented book thickness by exhaustive search over spine orders.

For a fixed spine order and a fixed direction for tight arcs, taking every
consecutive arc of that direction as tight is never worse (dropping a node
from a graph cannot raise its chromatic number), and the remaining arcs
need as many pages as their conflict graph needs colours. Two loose arcs
conflict when they cross or point opposite ways along the spine.

``obt`` explores spine orders as a depth-first search over prefixes. The
conflict graph of the arcs already fixed by a prefix is a subgraph of the
final one, so a prefix whose partial conflict graph needs more than ``k``
colours is abandoned. Reversing the spine while reversing the tight
direction maps embeddings to embeddings with the same page count, so only
upward tight arcs are searched.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import SizeGuard
from .graph import Arc, OrientedGraph, components, delete_arc, enumerate_connected
from .layout import SPINE, BookEmbedding, concatenate

OBT_MAX_N = 9
CHROMATIC_MAX_NODES = 64
MINE_MAX_N = {1: 7}
MINE_MAX_N_DEFAULT = 6


def _guard(n: int, limit: Optional[int], default: int, what: str) -> None:
    limit = default if limit is None else limit
    if n > limit:
        raise SizeGuard(f"{what}: {n} exceeds the guard of {limit}; raise the limit explicitly to proceed")


# ---------------------------------------------------------------------------
# Colouring
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConflictGraph:
    nodes: Tuple[Arc, ...]
    edges: FrozenSet[FrozenSet[Arc]]

    def adjacency(self) -> List[int]:
        index = {a: i for i, a in enumerate(self.nodes)}
        adj = [0] * len(self.nodes)
        for e in self.edges:
            a, b = tuple(e)
            i, j = index[a], index[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj


def _greedy_clique(adj: List[int]) -> int:
    best = 0
    for start in range(len(adj)):
        clique = 1
        cand = adj[start]
        while cand:
            # pick the candidate with most neighbours among remaining candidates
            v = max((i for i in range(len(adj)) if cand >> i & 1), key=lambda i: bin(adj[i] & cand).count("1"))
            clique += 1
            cand &= adj[v]
        best = max(best, clique)
    return best


def _k_coloring(adj: List[int], k: int) -> Optional[List[int]]:
    """A proper colouring with at most ``k`` colours, or None. DSatur branching."""
    n = len(adj)
    if n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * n
    # used[v] = bitmask of colours on coloured neighbours
    used = [0] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v] < 0:
                key = (bin(used[v]).count("1"), bin(adj[v]).count("1"))
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def rec(done: int, top: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(top + 1, k)):
            if used[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            nb = adj[v]
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                nb ^= low
                if colors[w] < 0 and not used[w] >> c & 1:
                    used[w] |= 1 << c
                    touched.append(w)
            if rec(done + 1, max(top, c + 1)):
                return True
            for w in touched:
                used[w] &= ~(1 << c)
            colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def chromatic_number(cg: ConflictGraph, max_nodes: int = CHROMATIC_MAX_NODES) -> Tuple[int, Dict[Arc, int]]:
    """Exact chromatic number of a conflict graph with a colouring witness."""
    if len(cg.nodes) > max_nodes:
        raise SizeGuard(f"chromatic_number: {len(cg.nodes)} nodes exceeds the guard of {max_nodes}")
    adj = cg.adjacency()
    if not adj:
        return 0, {}
    k = _greedy_clique(adj)
    while True:
        coloring = _k_coloring(adj, k)
        if coloring is not None:
            return k, dict(zip(cg.nodes, coloring))
        k += 1


# ---------------------------------------------------------------------------
# Fixed spine order
# ---------------------------------------------------------------------------


def conflict_graph(loose: Sequence[Arc], pos: Dict[int, int]) -> ConflictGraph:
    spans = {a: (min(pos[a.tail], pos[a.head]), max(pos[a.tail], pos[a.head]), pos[a.tail] < pos[a.head]) for a in loose}
    edges = set()
    for a, b in itertools.combinations(loose, 2):
        i, j, ua = spans[a]
        l, m, ub = spans[b]
        if ua != ub or i < l < j < m or l < i < m < j:
            edges.add(frozenset((a, b)))
    return ConflictGraph(tuple(loose), frozenset(edges))


def _embedding_for(g: OrientedGraph, order: Sequence[int], upward: bool) -> BookEmbedding:
    pos = {v: i for i, v in enumerate(order)}
    placement: Dict[Arc, int] = {}
    loose = []
    for a in g.sorted_arcs():
        d = pos[a.head] - pos[a.tail]
        if d == (1 if upward else -1):
            placement[a] = SPINE
        else:
            loose.append(a)
    k, coloring = chromatic_number(conflict_graph(loose, pos))
    placement.update(coloring)
    return BookEmbedding(tuple(order), placement, k)


def min_pages_for_spine(g: OrientedGraph, order: Sequence[int]) -> Tuple[int, BookEmbedding]:
    """Fewest pages over embeddings with this spine order (bottom-to-top)."""
    if sorted(order) != g.sorted_vertices():
        raise ValueError("order must be a permutation of the graph's vertices")
    up = _embedding_for(g, order, True)
    down = _embedding_for(g, order, False)
    best = up if up.pages <= down.pages else down
    return best.pages, best


def obt_by_permutation(g: OrientedGraph) -> int:
    """Reference value: minimum of ``min_pages_for_spine`` over all spine orders.

    No pruning and no symmetry reduction; only for cross-checking at small n.
    """
    if not g.vertices:
        return 0
    return min(min_pages_for_spine(g, p)[0] for p in itertools.permutations(g.sorted_vertices()))


# ---------------------------------------------------------------------------
# Pruned search
# ---------------------------------------------------------------------------


def _bipartite(adj: List[int], m: int) -> bool:
    side = [-1] * m
    for s in range(m):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            nb = adj[u]
            while nb:
                low = nb & -nb
                w = low.bit_length() - 1
                nb ^= low
                if side[w] < 0:
                    side[w] = side[u] ^ 1
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


class _Search:
    """Prefix search for a spine order of a connected graph needing <= k pages."""

    def __init__(self, g: OrientedGraph):
        self.labels = g.sorted_vertices()
        index = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        # nbrs[v] = list of (u, arc points v -> u)
        self.nbrs: List[List[Tuple[int, bool]]] = [[] for _ in range(self.n)]
        for t, h in g.arcs:
            self.nbrs[index[t]].append((index[h], True))
            self.nbrs[index[h]].append((index[t], False))

    def run(self, k: int, first: int) -> Optional[List[int]]:
        n = self.n
        pos = [-1] * n
        order: List[int] = []
        lo: List[int] = []
        hi: List[int] = []
        up: List[bool] = []
        adj: List[int] = []
        nbrs = self.nbrs

        def place(v: int) -> bool:
            p = len(order)
            start = len(lo)
            for u, v_is_tail in nbrs[v]:
                q = pos[u]
                if q < 0:
                    continue
                arc_up = not v_is_tail  # u is below v
                if arc_up and q == p - 1:
                    continue
                if k == 0:
                    return self._undo(start, lo, hi, up, adj)
                own = 0
                for i in range(len(lo)):
                    # hi[i] == p means a shared endpoint, which never crosses
                    if up[i] != arc_up or lo[i] < q < hi[i] < p:
                        own |= 1 << i
                if own and k == 1:
                    return self._undo(start, lo, hi, up, adj)
                idx = len(lo)
                mask = own
                while mask:
                    low = mask & -mask
                    adj[low.bit_length() - 1] |= 1 << idx
                    mask ^= low
                lo.append(q)
                hi.append(p)
                up.append(arc_up)
                adj.append(own)
            if len(lo) > start and k >= 2:
                m = len(lo)
                ok = _bipartite(adj, m) if k == 2 else _k_coloring(adj, k) is not None
                if not ok:
                    return self._undo(start, lo, hi, up, adj)
            pos[v] = p
            order.append(v)
            return True

        def unplace(v: int, start: int) -> None:
            order.pop()
            pos[v] = -1
            self._undo(start, lo, hi, up, adj)

        def dfs() -> bool:
            if len(order) == n:
                return True
            for v in range(n):
                if pos[v] >= 0:
                    continue
                start = len(lo)
                if place(v):
                    if dfs():
                        return True
                    unplace(v, start)
            return False

        place(first)
        if dfs():
            return [self.labels[i] for i in order]
        return None

    @staticmethod
    def _undo(start, lo, hi, up, adj) -> bool:
        while len(lo) > start:
            idx = len(lo) - 1
            lo.pop()
            hi.pop()
            up.pop()
            adj.pop()
            clear = ~(1 << idx)
            for i in range(idx):
                adj[i] &= clear
        return False


def _partition_min(g: OrientedGraph, first: int, cap: Optional[int] = None) -> Tuple[Optional[int], Optional[List[int]]]:
    """Smallest k (below ``cap`` when given) reachable with spine orders that
    start at vertex index ``first``."""
    search = _Search(g)
    limit = len(g.arcs) + 1 if cap is None else cap
    for k in range(limit):
        order = search.run(k, first)
        if order is not None:
            return k, order
    return None, None


def _obt_connected(g: OrientedGraph, jobs: int = 1) -> Tuple[int, List[int]]:
    n = len(g.vertices)
    if n == 1:
        return 0, list(g.vertices)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_partition_min, [g] * n, range(n)))
        best = min(k for k, _ in results)
        return best, next(order for k, order in results if k == best)
    best_k, best_order = None, None
    for first in range(n):
        k, order = _partition_min(g, first, best_k)
        if k is not None:
            best_k, best_order = k, order
            if k == 0:
                break
    return best_k, best_order


@dataclass(frozen=True)
class ObtResult:
    thickness: int
    witness: BookEmbedding


def obt(g: OrientedGraph, max_n: Optional[int] = None, jobs: int = 1) -> ObtResult:
    """Exact oriented book thickness with a witness embedding.

    Disconnected graphs take the maximum over components; the witness stacks
    the component embeddings along one spine. ``jobs > 1`` splits the search
    by bottom spine vertex across processes; the result does not depend on it.
    """
    _guard(len(g.vertices), max_n, OBT_MAX_N, "obt")
    parts = []
    thickness = 0
    for comp in components(g):
        k, order = _obt_connected(comp, jobs)
        emb = _embedding_for(comp, order, True)
        assert emb.pages == k
        parts.append(emb)
        thickness = max(thickness, k)
    witness = concatenate(parts)
    witness = BookEmbedding(witness.spine, witness.placement, thickness)
    return ObtResult(thickness, witness)


def has_embedding(g: OrientedGraph, k: int) -> bool:
    """Whether ``obt(g) <= k``."""
    if k < 0:
        return False
    for comp in components(g):
        if len(comp.vertices) == 1:
            continue
        search = _Search(comp)
        if not any(search.run(k, first) is not None for first in range(len(comp.vertices))):
            return False
    return True


def is_k_page_critical(g: OrientedGraph, k: int, max_n: Optional[int] = None) -> bool:
    _guard(len(g.vertices), max_n, OBT_MAX_N, "is_k_page_critical")
    for a in g.sorted_arcs():
        if not has_embedding(delete_arc(g, a), k - 1):
            return False
    return has_embedding(g, k) and not has_embedding(g, k - 1)


def mine_critical(n_max: int, k: int, max_n: Optional[int] = None) -> List[OrientedGraph]:
    """Connected members of the k-page critical class with at most ``n_max``
    vertices, one per isomorphism class (critical graphs are connected)."""
    _guard(n_max, max_n, MINE_MAX_N.get(k, MINE_MAX_N_DEFAULT), f"mine_critical(k={k})")
    found = []
    for n in range(1, n_max + 1):
        for g in enumerate_connected(n, allow_large=True):
            if is_k_page_critical(g, k, max_n=max(n, OBT_MAX_N)):
                found.append(g)
    return found
