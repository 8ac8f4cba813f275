"""Decidable checkers for hyperedge-intersection hypotheses and coloring quality.

Every checker returns ``None`` on success and a :class:`ViolationWitness` on
failure.  Witnesses are deterministic: the head-count scan runs first in edge
order, then pairwise conditions are scanned and the lexicographically first
failing index pair is reported.  A witness restricted to its own edges still
fails the same predicate.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .errors import CapExceeded
from .model import Coloring, DirectedHypergraph

DEFAULT_POLY_CAP = 1_000_000


class WitnessKind(enum.Enum):
    PROPERTY_S = "property-s"
    SPEC_BOTH = "specboth"
    LINEARITY = "linearity"
    POLY_CONDITION = "poly-condition"
    HEAD_COUNT = "head-count"


@dataclass(frozen=True)
class ViolationWitness:
    """The offending edges (and shared vertex, when there is one) of a failed check.

    ``families`` is only set by the multi-hypergraph intersection check, in
    which case it runs parallel to ``edges``.
    """

    kind: WitnessKind
    edges: tuple[int, ...]
    vertex: int | None = None
    families: tuple[int, ...] | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.families is not None:
            where = ", ".join(f"H{f}[{e}]" for f, e in zip(self.families, self.edges))
        else:
            where = ", ".join(f"edge {e}" for e in self.edges)
        at = f" at vertex {self.vertex}" if self.vertex is not None else ""
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.kind.value} violated ({where}{at}){tail}"


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def check_property_s(
    h: DirectedHypergraph, *, allow_equal_heads: bool = False
) -> ViolationWitness | None:
    """Check that heads are a strict minority and no two edges meet in a shared tail vertex.

    Passes iff (a) every hyperedge has fewer head than tail vertices
    (``allow_equal_heads`` relaxes this to "at most as many") and (b) no two
    hyperedges intersect in exactly one vertex that is a tail vertex of both.
    """
    for i, e in enumerate(h.edges):
        nh, nt = len(e.head), len(e.tail)
        if nh > nt or (nh == nt and not allow_equal_heads):
            op = "<=" if allow_equal_heads else "<"
            return ViolationWitness(
                WitnessKind.HEAD_COUNT, (i,), detail=f"needs #heads {op} #tails, got {nh} vs {nt}"
            )

    masks = [_mask(e.support) for e in h.edges]
    by_tail: dict[int, list[int]] = {}
    for i, e in enumerate(h.edges):
        for v in e.tail:
            by_tail.setdefault(v, []).append(i)

    best: tuple[int, int, int] | None = None  # (i, j, v)
    for v in sorted(by_tail):
        idxs = by_tail[v]
        if len(idxs) < 2:
            continue
        vbit = 1 << v
        rests = [masks[i] & ~vbit for i in idxs]
        common = rests[0]
        for r in rests[1:]:
            common &= r
            if not common:
                break
        if common:
            # Some vertex besides v lies in every edge, so no pair meets in v alone.
            continue
        # Quadratic fallback, only reached when a violation at v is plausible.
        found = None
        for a in range(len(idxs)):
            ra = rests[a]
            for b in range(a + 1, len(idxs)):
                if not ra & rests[b]:
                    found = (idxs[a], idxs[b], v)
                    break
            if found:
                break
        if found and (best is None or found[:2] < best[:2]):
            best = found
    if best is not None:
        i, j, v = best
        return ViolationWitness(
            WitnessKind.PROPERTY_S, (i, j), vertex=v, detail="one-vertex intersection, tail of both"
        )
    return None


def check_specboth(h: DirectedHypergraph) -> ViolationWitness | None:
    """Check that every edge has a tail vertex and one-vertex intersections are heads of both."""
    for i, e in enumerate(h.edges):
        if not e.tail:
            return ViolationWitness(WitnessKind.HEAD_COUNT, (i,), detail="hyperedge has no tail vertex")
    masks = [_mask(e.support) for e in h.edges]
    for i, j in combinations(range(len(h.edges)), 2):
        inter = masks[i] & masks[j]
        if inter and inter.bit_count() == 1:
            v = inter.bit_length() - 1
            if v not in h.edges[i].head or v not in h.edges[j].head:
                return ViolationWitness(
                    WitnessKind.SPEC_BOTH,
                    (i, j),
                    vertex=v,
                    detail="one-vertex intersection must be a head vertex of both edges",
                )
    return None


def check_linear(h: DirectedHypergraph) -> ViolationWitness | None:
    """Check that every pair of hyperedges intersects in at most one vertex."""
    masks = [_mask(e.support) for e in h.edges]
    for i, j in combinations(range(len(h.edges)), 2):
        size = (masks[i] & masks[j]).bit_count()
        if size > 1:
            return ViolationWitness(
                WitnessKind.LINEARITY, (i, j), detail=f"intersection has {size} vertices"
            )
    return None


def check_poly_condition(
    hs: list[DirectedHypergraph], c: int, cap: int = DEFAULT_POLY_CAP
) -> ViolationWitness | None:
    """Check the covering hypothesis for ``c`` hypergraph families on one vertex set.

    For every ``i <= c``, every choice of ``i`` hyperedges taken from ``i``
    distinct families must have an empty intersection or intersect in at
    least ``i`` vertices.  Singletons get no empty-intersection escape: an
    empty hyperedge can never be covered, so it is reported as a violation.

    The number of tuples inspected is the product of family sizes summed over
    family subsets; ``cap`` bounds it and :class:`CapExceeded` is raised when
    the instance is too large.
    """
    if len(hs) != c:
        raise ValueError(f"expected {c} hypergraphs, got {len(hs)}")
    if len({g.n for g in hs}) > 1:
        raise ValueError("all hypergraphs must share one vertex set")

    total = 0
    sizes = [len(g.edges) for g in hs]
    for i in range(1, c + 1):
        for fams in combinations(range(c), i):
            total += prod(sizes[f] for f in fams)
            if total > cap:
                raise CapExceeded(f"poly-condition check needs {total}+ tuples, cap is {cap}")

    for j, g in enumerate(hs):
        for k, e in enumerate(g.edges):
            if not e.support:
                return ViolationWitness(
                    WitnessKind.POLY_CONDITION,
                    (k,),
                    families=(j,),
                    detail="empty hyperedge cannot contain any color",
                )

    masks = [[_mask(e.support) for e in g.edges] for g in hs]
    for i in range(2, c + 1):
        for fams in combinations(range(c), i):
            for picks in product(*(range(sizes[f]) for f in fams)):
                inter = masks[fams[0]][picks[0]]
                for f, k in zip(fams[1:], picks[1:]):
                    inter &= masks[f][k]
                    if not inter:
                        break
                if inter and inter.bit_count() < i:
                    return ViolationWitness(
                        WitnessKind.POLY_CONDITION,
                        picks,
                        families=fams,
                        detail=f"{i} edges from {i} families intersect in "
                        f"{inter.bit_count()} vertices, need 0 or >= {i}",
                    )
    return None


def _require_total(h: DirectedHypergraph, coloring: Coloring) -> None:
    if len(coloring.colors) != h.n:
        raise ValueError("coloring does not match the hypergraph's vertex count")


def is_proper_coloring(h: DirectedHypergraph, coloring: Coloring) -> int | None:
    """``None`` if no hyperedge is monochromatic, else the first monochromatic edge index."""
    _require_total(h, coloring)
    cols = coloring.colors
    for i, e in enumerate(h.edges):
        if len({cols[v] for v in e.support}) <= 1:
            return i
    return None


def is_polychromatic(h: DirectedHypergraph, coloring: Coloring, c: int) -> int | None:
    """``None`` if every hyperedge sees all ``c`` colors, else the first failing edge index."""
    _require_total(h, coloring)
    if coloring.num_colors < c:
        raise ValueError(f"coloring has {coloring.num_colors} colors, need at least {c}")
    want = set(range(c))
    cols = coloring.colors
    for i, e in enumerate(h.edges):
        if not want <= {cols[v] for v in e.support}:
            return i
    return None


def is_rainbow_cover(hs: list[DirectedHypergraph], coloring: Coloring) -> tuple[int, int] | None:
    """``None`` if every edge of family ``j`` contains a vertex colored ``j``.

    Otherwise the first failing ``(family, edge index)`` pair.
    """
    cols = coloring.colors
    for j, g in enumerate(hs):
        _require_total(g, coloring)
        for k, e in enumerate(g.edges):
            if not any(cols[v] == j for v in e.support):
                return (j, k)
    return None
