"""Exhaustive ground-truth searches at desk scale.

These are references the fast algorithms are certified against: proper and
polychromatic colorability by enumerating assignments, and subhypergraph
containment by backtracking over injections.  Everything is deterministic;
the first object in counting order is returned.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .model import Coloring, DirectedHyperedge, DirectedHypergraph

DEFAULT_VERTEX_CAP = 24
DEFAULT_ASSIGNMENT_CAP = 10_000_000
DEFAULT_INJECTION_CAP = 100_000_000


def _search_colorings(h: DirectedHypergraph, c: int, accept_edge) -> Coloring | None:
    """First assignment (counting order, vertex 0 pinned to color 0) whose
    fully-colored edges all satisfy ``accept_edge(colors, support)``."""
    n = h.n
    if n == 0:
        return Coloring(c, ())
    closing: list[list[frozenset[int]]] = [[] for _ in range(n)]
    for e in h.edges:
        closing[max(e.support)].append(e.support)
    colors = [0] * n

    def search(v: int) -> bool:
        if v == n:
            return True
        for col in range(1) if v == 0 else range(c):
            colors[v] = col
            if all(accept_edge(colors, sup) for sup in closing[v]) and search(v + 1):
                return True
        return False

    if not search(0):
        return None
    return Coloring(c, tuple(colors))


def brute_force_k_colorable(
    h: DirectedHypergraph, c: int, cap_vertices: int = DEFAULT_VERTEX_CAP
) -> Coloring | None:
    """Some proper ``c``-coloring if one exists, else ``None``.

    Backtracks over assignments in counting order with the first vertex
    pinned to color 0 (any proper coloring can be permuted into that form).
    Refuses hypergraphs with more than ``cap_vertices`` vertices.
    """
    if c < 1:
        raise ValueError("need at least one color")
    if h.n > cap_vertices:
        raise CapExceeded(f"{h.n} vertices exceeds the cap of {cap_vertices}")

    def proper(colors, sup):
        return len({colors[v] for v in sup}) > 1

    return _search_colorings(h, c, proper)


def brute_force_polychromatic(
    h: DirectedHypergraph, c: int, cap: int = DEFAULT_ASSIGNMENT_CAP
) -> Coloring | None:
    """Some coloring in which every hyperedge sees all ``c`` colors, else ``None``."""
    if c < 1:
        raise ValueError("need at least one color")
    if c**h.n > cap:
        raise CapExceeded(f"{c}^{h.n} assignments exceeds the cap of {cap}")
    if any(len(e.support) < c for e in h.edges):
        return None
    want = frozenset(range(c))

    def poly(colors, sup):
        return {colors[v] for v in sup} >= want

    return _search_colorings(h, c, poly)


@dataclass(frozen=True)
class Embedding:
    """An injection of pattern vertices into host vertices realizing every pattern edge.

    ``vertex_map[p]`` is the host vertex for pattern vertex ``p``;
    ``edge_map[i]`` is the host edge witnessing pattern edge ``i`` (pairwise
    distinct, tails map into tails and heads into heads).
    """

    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def is_valid(self, host: DirectedHypergraph, pattern: DirectedHypergraph) -> bool:
        if len(self.vertex_map) != pattern.n or len(set(self.vertex_map)) != pattern.n:
            return False
        if not all(0 <= v < host.n for v in self.vertex_map):
            return False
        if len(self.edge_map) != len(pattern.edges) or len(set(self.edge_map)) != len(self.edge_map):
            return False
        for pe, hi in zip(pattern.edges, self.edge_map):
            if not 0 <= hi < len(host.edges):
                return False
            he = host.edges[hi]
            if not {self.vertex_map[v] for v in pe.tail} <= he.tail:
                return False
            if not {self.vertex_map[v] for v in pe.head} <= he.head:
                return False
        return True


def _edge_masks(edges: tuple[DirectedHyperedge, ...]) -> tuple[list[int], list[int]]:
    tails, heads = [], []
    for e in edges:
        tm = hm = 0
        for v in e.tail:
            tm |= 1 << v
        for v in e.head:
            hm |= 1 << v
        tails.append(tm)
        heads.append(hm)
    return tails, heads


def contains_subhypergraph(
    host: DirectedHypergraph,
    pattern: DirectedHypergraph,
    cap: int = DEFAULT_INJECTION_CAP,
) -> Embedding | None:
    """First embedding of ``pattern`` into ``host`` in deterministic order, or ``None``.

    Pattern vertices are assigned in degree-descending order, candidates
    pruned by (tail-degree, head-degree) signatures, and partially mapped
    pattern edges checked as soon as all their vertices are placed.  Distinct
    pattern edges must be witnessed by distinct host edges.
    """
    k = pattern.n
    if k > host.n:
        return None
    injections = 1
    for i in range(k):
        injections *= host.n - i
        if injections > cap:
            raise CapExceeded(f"more than {cap} injections to consider")

    p_tail_deg = [0] * k
    p_head_deg = [0] * k
    for e in pattern.edges:
        for v in e.tail:
            p_tail_deg[v] += 1
        for v in e.head:
            p_head_deg[v] += 1
    h_tail_deg = [0] * host.n
    h_head_deg = [0] * host.n
    host_incident: list[list[int]] = [[] for _ in range(host.n)]
    for i, e in enumerate(host.edges):
        for v in e.tail:
            h_tail_deg[v] += 1
        for v in e.head:
            h_head_deg[v] += 1
        for v in e.support:
            host_incident[v].append(i)

    order = sorted(range(k), key=lambda p: (-(p_tail_deg[p] + p_head_deg[p]), p))
    position = {p: i for i, p in enumerate(order)}
    # Pattern edges become checkable once their last vertex (in ``order``) is placed.
    check_at: list[list[int]] = [[] for _ in range(k)]
    for i, e in enumerate(pattern.edges):
        check_at[max(position[v] for v in e.support)].append(i)

    host_tails, host_heads = _edge_masks(host.edges)
    mapping = [-1] * k
    used = [False] * host.n

    def edge_candidates(i: int) -> list[int]:
        pe = pattern.edges[i]
        tmask = hmask = 0
        for v in pe.tail:
            tmask |= 1 << mapping[v]
        for v in pe.head:
            hmask |= 1 << mapping[v]
        anchor = mapping[next(iter(pe.support))]
        return [
            j
            for j in host_incident[anchor]
            if tmask & host_tails[j] == tmask and hmask & host_heads[j] == hmask
        ]

    def match_edges(i: int, taken: set[int]) -> list[int] | None:
        if i == len(pattern.edges):
            return []
        for j in edge_candidates(i):
            if j not in taken:
                taken.add(j)
                rest = match_edges(i + 1, taken)
                if rest is not None:
                    return [j] + rest
                taken.discard(j)
        return None

    def place(depth: int) -> Embedding | None:
        if depth == k:
            edge_map = match_edges(0, set())
            if edge_map is None:
                return None
            return Embedding(tuple(mapping), tuple(edge_map))
        p = order[depth]
        for v in range(host.n):
            if used[v] or h_tail_deg[v] < p_tail_deg[p] or h_head_deg[v] < p_head_deg[p]:
                continue
            mapping[p] = v
            used[v] = True
            if all(edge_candidates(i) for i in check_at[depth]):
                found = place(depth + 1)
                if found is not None:
                    return found
            used[v] = False
            mapping[p] = -1
        return None

    return place(0)
