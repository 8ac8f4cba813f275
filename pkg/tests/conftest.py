"""Seeded instance generators shared by the unit and acceptance tests.

Everything here is deterministic given the ``random.Random`` instance passed
in; the library itself never uses randomness.
"""
from __future__ import annotations

import random

from dhcolor import DirectedHypergraph, RecolorTrace, two_one


def restrict(h: DirectedHypergraph, indices) -> DirectedHypergraph:
    """Sub-hypergraph with only the given edges (vertex set unchanged)."""
    return DirectedHypergraph(h.n, tuple(h.edges[i] for i in indices), h.names)


def assert_strictly_decreasing(trace: RecolorTrace) -> None:
    counts = trace.bad_counts()
    assert all(a > b for a, b in zip(counts, counts[1:])), counts
    for step in trace.steps:
        assert step.bad_after < step.bad_before


def random_two_one(rng: random.Random, n: int, m: int) -> DirectedHypergraph:
    triples = []
    for _ in range(m):
        a, b, c = rng.sample(range(n), 3)
        triples.append((a, b, c))
    return two_one(n, triples)


def _one_point_tail_clash(tail1, sup1, tail2, sup2) -> bool:
    inter = sup1 & sup2
    if len(inter) != 1:
        return False
    (v,) = inter
    return v in tail1 and v in tail2


def random_property_s_two_one(rng: random.Random, n: int, m_target: int) -> DirectedHypergraph:
    """Random 2->1 hypergraph built by accepting only proposals that keep the
    pairwise intersection condition (duplicate and same-support edges allowed)."""
    tails: list[frozenset[int]] = []
    sups: list[frozenset[int]] = []
    triples: list[tuple[int, int, int]] = []
    attempts = 0
    while len(triples) < m_target and attempts < 6 * m_target + 20:
        attempts += 1
        a, b, c = rng.sample(range(n), 3)
        tail, sup = frozenset((a, b)), frozenset((a, b, c))
        if any(_one_point_tail_clash(tail, sup, t2, s2) for t2, s2 in zip(tails, sups)):
            continue
        tails.append(tail)
        sups.append(sup)
        triples.append((a, b, c))
    return two_one(n, triples)


def random_linear_property_s(rng: random.Random, n: int, m_target: int) -> DirectedHypergraph:
    """Random linear directed hypergraph with strict head minority and the
    one-point intersection condition, by accept/reject."""
    edges: list[tuple[frozenset[int], frozenset[int]]] = []
    attempts = 0
    while len(edges) < m_target and attempts < 8 * m_target + 20:
        attempts += 1
        size = rng.randint(2, min(6, n))
        tail_size = rng.randint(size // 2 + 1, size)
        verts = rng.sample(range(n), size)
        tail = frozenset(verts[:tail_size])
        head = frozenset(verts[tail_size:])
        sup = tail | head
        ok = True
        for t2, h2 in edges:
            inter = sup & (t2 | h2)
            if len(inter) > 1:
                ok = False
                break
            if len(inter) == 1:
                (v,) = inter
                if v in tail and v in t2:
                    ok = False
                    break
        if ok:
            edges.append((tail, head))
    return DirectedHypergraph.from_pairs(n, edges)


def random_specboth(rng: random.Random, n: int, m_target: int) -> DirectedHypergraph:
    """Random directed hypergraph where one-point intersections head both edges."""
    edges: list[tuple[frozenset[int], frozenset[int]]] = []
    attempts = 0
    while len(edges) < m_target and attempts < 8 * m_target + 20:
        attempts += 1
        size = rng.randint(2, min(5, n))
        tail_size = rng.randint(1, size)
        verts = rng.sample(range(n), size)
        tail = frozenset(verts[:tail_size])
        head = frozenset(verts[tail_size:])
        sup = tail | head
        ok = True
        for t2, h2 in edges:
            inter = sup & (t2 | h2)
            if len(inter) == 1:
                (v,) = inter
                if v not in head or v not in h2:
                    ok = False
                    break
        if ok:
            edges.append((tail, head))
    return DirectedHypergraph.from_pairs(n, edges)


def random_poly_families(
    rng: random.Random, c: int, n: int | None = None
) -> list[DirectedHypergraph]:
    """Random families satisfying the covering hypothesis: every choice of i
    edges from i distinct families has an empty intersection or one of size
    at least i.  Mixes shared-core designs, disjoint-block designs and
    rejection-sampled random families."""
    from dhcolor import check_poly_condition

    n = n if n is not None else rng.randint(max(c + 1, 4), 12)
    style = rng.choice(("core", "blocks", "random"))
    if style == "blocks":
        verts = list(range(n))
        rng.shuffle(verts)
        blocks = []
        i = 0
        while n - i >= c:
            size = rng.randint(c, min(c + 2, n - i))
            if n - (i + size) < c:
                size = n - i
            blocks.append(frozenset(verts[i : i + size]))
            i += size
        families = []
        for _ in range(c):
            m = rng.randint(1, 3)
            families.append(
                DirectedHypergraph.from_pairs(
                    n, [(rng.choice(blocks), ()) for _ in range(m)]
                )
            )
        return families
    if style == "random":
        for _ in range(20):
            families = []
            for _ in range(c):
                m = rng.randint(1, 3)
                pairs = []
                for _ in range(m):
                    size = rng.randint(c, min(c + 2, n))
                    pairs.append((frozenset(rng.sample(range(n), size)), ()))
                families.append(DirectedHypergraph.from_pairs(n, pairs))
            if check_poly_condition(families, c, cap=200_000) is None:
                return families
        # fall through to the always-valid shared-core design
    core = frozenset(rng.sample(range(n), c))
    rest = [v for v in range(n) if v not in core]
    families = []
    for _ in range(c):
        m = rng.randint(1, 4)
        pairs = []
        for _ in range(m):
            extra = frozenset(rng.sample(rest, rng.randint(0, min(3, len(rest)))))
            pairs.append((core | extra, ()))
        families.append(DirectedHypergraph.from_pairs(n, pairs))
    return families
