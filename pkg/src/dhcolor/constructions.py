"""Generators for the fixed forbidden patterns and the extremal constructions.

Vertices are numbered 1..n in the emitted token names so that small instances
read the same way they are usually written (e.g. the two-edge pattern S is
``1 2 -> 3`` and ``1 4 -> 5``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .model import DirectedHypergraph, two_one


def _names(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


@dataclass(frozen=True)
class NamedPattern:
    name: str
    hypergraph: DirectedHypergraph


_PATTERN_TRIPLES = {
    # Two edges meeting in a single shared tail vertex.
    "S": (5, [(0, 1, 2), (0, 3, 4)]),
    # Five-edge oriented configuration used for the extremal bounds.
    "F": (5, [(0, 1, 2), (0, 2, 3), (1, 2, 4), (0, 3, 1), (1, 4, 0)]),
    # An equally good five-edge variant.
    "F_alt": (5, [(0, 1, 2), (0, 2, 3), (1, 2, 4), (2, 3, 1), (2, 4, 0)]),
    # The cyclic triangle: all three orientations of one triple.
    "F0": (3, [(0, 1, 2), (0, 2, 1), (1, 2, 0)]),
}

PATTERN_NAMES = tuple(_PATTERN_TRIPLES)


def pattern(name: str) -> NamedPattern:
    """One of the fixed 2->1 patterns S, F, F_alt, F0."""
    if name not in _PATTERN_TRIPLES:
        raise ValueError(f"unknown pattern {name!r}, expected one of {', '.join(PATTERN_NAMES)}")
    n, triples = _PATTERN_TRIPLES[name]
    return NamedPattern(name, two_one(n, triples, _names(n)))


def lower_bound_construction(n: int) -> DirectedHypergraph:
    """For every triple i < j < k, the two hyperedges ``ik -> j`` and ``jk -> i``.

    Has exactly 2 * C(n, 3) hyperedges, and every edge ``ab -> c`` satisfies
    c < max(a, b), which is what makes it avoid the pattern F.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    triples = []
    for i, j, k in combinations(range(n), 3):
        triples.append((i, k, j))
        triples.append((j, k, i))
    return two_one(n, triples, _names(n))


def oriented_lower_bound(n: int) -> DirectedHypergraph:
    """One hyperedge per triple i < j < k, keeping ``ik -> j``; C(n, 3) edges, oriented."""
    if n < 3:
        raise ValueError("need at least 3 vertices")
    return two_one(n, [(i, k, j) for i, j, k in combinations(range(n), 3)], _names(n))


def tightness_construction(k: int) -> DirectedHypergraph:
    """A head-parity example showing the strict head-minority requirement is sharp.

    Three parts of size 2k - 1 each; for every cyclic pair of parts, every
    choice of k vertices from the first (the heads) and k from the second
    (the tails) forms a hyperedge.  Heads and tails tie at size k, every
    one-vertex intersection contains a head of one of the edges (two k-sets
    of a (2k-1)-set always meet, so same-part head sets overlap), and a
    majority argument shows no proper 2-coloring exists.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    part = 2 * k - 1
    parts = [range(i * part, (i + 1) * part) for i in range(3)]
    pairs = []
    for i in range(3):
        for heads in combinations(parts[i], k):
            for tails in combinations(parts[(i + 1) % 3], k):
                pairs.append((tails, heads))
    return DirectedHypergraph.from_pairs(3 * part, pairs, _names(3 * part))


def star_construction(n: int, k: int) -> DirectedHypergraph:
    """All k-subsets through one fixed vertex, which heads every hyperedge.

    C(n-1, k-1) hyperedges; any two share the head vertex, so the pairwise
    intersection condition holds with room to spare.
    """
    if not n >= k >= 3:
        raise ValueError("need n >= k >= 3")
    pairs = [(rest, (0,)) for rest in combinations(range(1, n), k - 1)]
    return DirectedHypergraph.from_pairs(n, pairs, _names(n))
