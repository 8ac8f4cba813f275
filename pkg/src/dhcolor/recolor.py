"""Improvement-loop coloring algorithms driven by intersection hypotheses.

Three colorers live here:

* :func:`color_rainbow` builds, for ``c`` hypergraph families, a ``c``-coloring
  in which every edge of family ``j`` contains a vertex colored ``j``.  It
  starts from the all-0 coloring and repeatedly repairs an uncovered edge by
  walking a chain of "blocking" edges until some vertex can be safely
  recolored; the uncovered-edge count strictly decreases each round.
* :func:`color_specboth` properly 2-colors hypergraphs in which one-vertex
  intersections are head vertices of both edges, by flipping a tail vertex of
  a monochromatic edge until none remains.
* :func:`color_linear` properly 2-colors linear hypergraphs that pass the
  strict head-minority/tail-intersection check, by peeling degree <= 1
  vertices and coloring them greedily on the way back.

None of them pre-checks its hypothesis.  Each step that the hypothesis
guarantees to succeed raises :class:`ConditionViolated` when it does not,
which certifies that the input violated the hypothesis.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConditionViolated, StructureViolated
from .model import Coloring, DirectedHypergraph
from .properties import check_poly_condition, is_proper_coloring

DEFAULT_POLY_CAP = 1_000_000


@dataclass(frozen=True)
class RecolorStep:
    vertex: int
    old_color: int
    new_color: int
    bad_before: int
    bad_after: int


@dataclass
class RecolorTrace:
    """One entry per recoloring; the recorded bad counts strictly decrease."""

    steps: list[RecolorStep] = field(default_factory=list)

    def bad_counts(self) -> list[int]:
        if not self.steps:
            return []
        return [self.steps[0].bad_before] + [s.bad_after for s in self.steps]


def _supports(hs: list[DirectedHypergraph]) -> list[list[frozenset[int]]]:
    if not hs:
        raise ValueError("need at least one hypergraph family")
    if len({g.n for g in hs}) > 1:
        raise ValueError("all hypergraphs must share one vertex set")
    return [[e.support for e in g.edges] for g in hs]


def _count_uncovered(supports, colors) -> int:
    bad = 0
    for j, edges in enumerate(supports):
        for sup in edges:
            if not any(colors[v] == j for v in sup):
                bad += 1
    return bad


def _first_uncovered(supports, colors):
    for j, edges in enumerate(supports):
        for k, sup in enumerate(edges):
            if not any(colors[v] == j for v in sup):
                return j, k
    return None


def color_rainbow(hs: list[DirectedHypergraph]) -> tuple[Coloring, RecolorTrace]:
    """Color the common vertex set so family ``j``'s edges all contain color ``j``.

    Hypothesis (not pre-checked, see :func:`check_poly_condition`): every set
    of ``i`` edges from ``i`` distinct families has an empty intersection or
    one of size at least ``i``.

    Each outer round fixes one uncovered edge ``H1`` of some family ``t``.
    Walking candidates ``v`` inside the running intersection ``X`` of the
    chain ``H1, H2, ...``: if no edge of ``v``'s color class has ``v`` as its
    unique vertex of that color, recoloring ``v`` to ``t`` repairs ``H1``
    without breaking anything; otherwise the blocking edge joins the chain
    and the intersection shrinks.  The hypothesis keeps ``X`` large
    enough to supply fresh vertices with fresh colors, so at most ``c``
    steps are taken per round.
    """
    c = len(hs)
    supports = _supports(hs)
    n = hs[0].n
    colors = [0] * n
    trace = RecolorTrace()

    bad = _count_uncovered(supports, colors)
    rounds = 0
    while bad:
        rounds += 1
        if rounds > sum(len(edges) for edges in supports) + 1:
            raise ConditionViolated("uncovered-edge count stopped decreasing")
        t, k = _first_uncovered(supports, colors)
        h1 = supports[t][k]
        if not h1:
            raise ConditionViolated(f"H{t}[{k}] is empty and can never be covered")

        x = set(h1)
        used_vertices: list[int] = []
        used_colors = {t}
        v = min(h1)
        while True:
            cv = colors[v]
            if cv in used_colors:
                raise ConditionViolated(
                    f"chain vertex {v} repeats color {cv}; the intersection "
                    "hypothesis would have supplied a fresh color"
                )
            blocking = None
            for k2, sup in enumerate(supports[cv]):
                if v in sup and sum(1 for u in sup if colors[u] == cv) == 1:
                    blocking = k2
                    break
            if blocking is None:
                colors[v] = t
                after = _count_uncovered(supports, colors)
                if after >= bad:
                    raise ConditionViolated(
                        "recoloring failed to decrease the uncovered-edge count"
                    )
                trace.steps.append(RecolorStep(v, cv, t, bad, after))
                bad = after
                break
            used_colors.add(cv)
            used_vertices.append(v)
            x &= supports[cv][blocking]
            candidates = x.difference(used_vertices)
            if not candidates:
                raise ConditionViolated(
                    f"chain intersection has only {len(x)} vertices after "
                    f"{len(used_vertices) + 1} edges; hypothesis requires more"
                )
            v = min(candidates)

    return Coloring(max(c, 1), tuple(colors)), trace


def color_polychromatic(
    h: DirectedHypergraph, c: int, cap: int = DEFAULT_POLY_CAP
) -> Coloring:
    """Color so that every hyperedge contains all ``c`` colors.

    The hypothesis (every set of at most ``c`` hyperedges has an empty
    intersection or one of size at least ``c``) is checked first and a
    violation is rejected with :class:`ConditionViolated`.
    """
    families = [h] * c
    witness = check_poly_condition(families, c, cap)
    if witness is not None:
        raise ConditionViolated(str(witness))
    coloring, _ = color_rainbow(families)
    return coloring


def color_specboth(h: DirectedHypergraph) -> tuple[Coloring, RecolorTrace]:
    """Properly 2-color by flipping one tail vertex of a monochromatic edge at a time.

    Hypothesis (see :func:`check_specboth`): every edge has a tail vertex and
    every one-vertex intersection is a head vertex of both edges.  Under it a
    flip never creates a new monochromatic edge, so the count strictly drops.
    """
    colors = [0] * h.n
    trace = RecolorTrace()
    supports = [e.support for e in h.edges]

    def mono_count() -> int:
        return sum(1 for sup in supports if len({colors[v] for v in sup}) <= 1)

    bad = mono_count()
    while bad:
        for i, sup in enumerate(supports):
            if len({colors[v] for v in sup}) <= 1:
                break
        e = h.edges[i]
        if not e.tail:
            raise ConditionViolated(f"monochromatic edge {i} has no tail vertex to flip")
        v = min(e.tail)
        old = colors[v]
        colors[v] = 1 - old
        after = mono_count()
        if after >= bad:
            raise ConditionViolated(
                f"flipping vertex {v} did not decrease the monochromatic count"
            )
        trace.steps.append(RecolorStep(v, old, 1 - old, bad, after))
        bad = after
    return Coloring(2, tuple(colors)), trace


def color_linear(h: DirectedHypergraph) -> Coloring:
    """Properly 2-color a linear hypergraph that passes the strict intersection check.

    Peels isolated vertices, then degree-1 vertices together with their unique
    hyperedge, onto a stack; the hypothesis guarantees a degree <= 1 vertex
    always exists while edges remain (:class:`StructureViolated` otherwise).
    Unwinding colors isolated vertices 0 and each peeled vertex opposite to
    the smallest-index other vertex of its edge.
    """
    for i, e in enumerate(h.edges):
        if len(e.support) < 2:
            raise ConditionViolated(
                f"edge {i} has fewer than two vertices and can never be bichromatic"
            )

    alive_edge = [True] * len(h.edges)
    alive_vertex = [True] * h.n
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for i, e in enumerate(h.edges):
        for v in e.support:
            incident[v].append(i)
    degree = [len(incident[v]) for v in range(h.n)]

    stack: list[tuple[int, int | None]] = []  # (vertex, peeled edge or None)
    remaining = h.n
    while remaining:
        isolated = next((v for v in range(h.n) if alive_vertex[v] and degree[v] == 0), None)
        if isolated is not None:
            alive_vertex[isolated] = False
            remaining -= 1
            stack.append((isolated, None))
            continue
        leaf = next((v for v in range(h.n) if alive_vertex[v] and degree[v] == 1), None)
        if leaf is None:
            raise StructureViolated(
                "no vertex of degree <= 1; the linear + intersection hypothesis "
                "guarantees one while edges remain"
            )
        (edge,) = [i for i in incident[leaf] if alive_edge[i]]
        alive_edge[edge] = False
        for u in h.edges[edge].support:
            degree[u] -= 1
        alive_vertex[leaf] = False
        remaining -= 1
        stack.append((leaf, edge))

    colors: list[int | None] = [None] * h.n
    for v, edge in reversed(stack):
        if edge is None:
            colors[v] = 0
        else:
            other = min(u for u in h.edges[edge].support if u != v)
            colors[v] = 1 - colors[other]
    coloring = Coloring(2, tuple(colors))
    bad = is_proper_coloring(h, coloring)
    if bad is not None:
        raise StructureViolated(f"peeling produced a monochromatic edge {bad}")
    return coloring
