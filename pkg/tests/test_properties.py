"""Checker behaviour, witness determinism, and witness re-checkability."""
from __future__ import annotations

import random

import pytest

from conftest import random_two_one, restrict
from dhcolor import (
    CapExceeded,
    Coloring,
    DirectedHypergraph,
    WitnessKind,
    check_linear,
    check_poly_condition,
    check_property_s,
    check_specboth,
    contains_subhypergraph,
    is_polychromatic,
    is_proper_coloring,
    is_rainbow_cover,
    pattern,
    two_one,
)

S = pattern("S").hypergraph
F0 = pattern("F0").hypergraph
EMPTY = DirectedHypergraph(0, ())


def test_property_s_on_pattern_s():
    w = check_property_s(S)
    assert w is not None
    assert w.kind is WitnessKind.PROPERTY_S
    assert w.edges == (0, 1)
    assert w.vertex == 0


def test_property_s_trivial_and_derived():
    assert check_property_s(EMPTY) is None
    # All pairwise intersections of the cyclic triangle have size two or three.
    assert check_property_s(F0) is None


def test_property_s_head_count():
    h = DirectedHypergraph.from_pairs(4, [((0, 1), (2, 3))])
    w = check_property_s(h)
    assert w is not None and w.kind is WitnessKind.HEAD_COUNT
    assert check_property_s(h, allow_equal_heads=True) is None
    h2 = DirectedHypergraph.from_pairs(4, [((0,), (1, 2, 3))])
    assert check_property_s(h2, allow_equal_heads=True) is not None


def test_property_s_first_witness_is_lexicographic():
    # Edges 1 and 3 clash at vertex 0, and so do edges 1 and 2 at vertex 5.
    h = two_one(
        8,
        [
            (6, 7, 2),
            (0, 5, 2),
            (5, 3, 4),
            (0, 1, 3),
        ],
    )
    w = check_property_s(h)
    assert w is not None and w.edges == (1, 2) and w.vertex == 5


def test_specboth():
    assert check_specboth(two_one(5, [(0, 1, 2), (3, 4, 2)])) is None
    w = check_specboth(two_one(5, [(0, 1, 2), (2, 3, 4)]))
    assert w is not None and w.kind is WitnessKind.SPEC_BOTH and w.vertex == 2
    assert check_specboth(EMPTY) is None
    tailless = DirectedHypergraph.from_pairs(2, [((), (0, 1))])
    w = check_specboth(tailless)
    assert w is not None and w.kind is WitnessKind.HEAD_COUNT


def test_linear():
    w = check_linear(two_one(3, [(0, 1, 2), (0, 2, 1)]))
    assert w is not None and w.kind is WitnessKind.LINEARITY and w.edges == (0, 1)
    assert check_linear(two_one(5, [(0, 1, 2), (3, 4, 2)])) is None
    assert check_linear(EMPTY) is None


def test_poly_condition():
    edge12 = DirectedHypergraph.from_pairs(2, [((0, 1), ())])
    assert check_poly_condition([edge12, edge12], 2) is None

    h2 = DirectedHypergraph.from_pairs(3, [((0, 2), ())])
    w = check_poly_condition([edge12_pad(3), h2], 2)
    assert w is not None and w.kind is WitnessKind.POLY_CONDITION
    assert w.families == (0, 1)

    with pytest.raises(ValueError):
        check_poly_condition([edge12], 2)
    with pytest.raises(CapExceeded):
        check_poly_condition([edge12, edge12], 2, cap=1)


def edge12_pad(n):
    return DirectedHypergraph.from_pairs(n, [((0, 1), ())])


def test_poly_condition_same_edge_through_families():
    # The same 2-set offered by both families intersects itself in 2 vertices.
    single = DirectedHypergraph.from_pairs(4, [((0, 1), ())])
    assert check_poly_condition([single, single], 2) is None
    # A 1-set offered by both families is too small for the pair level.
    tiny = DirectedHypergraph.from_pairs(4, [((0,), ())])
    w = check_poly_condition([tiny, tiny], 2)
    assert w is not None


def test_proper_and_polychromatic_checkers():
    h = two_one(3, [(0, 1, 2)])
    assert is_proper_coloring(h, Coloring(2, (0, 0, 1))) is None
    assert is_proper_coloring(h, Coloring(2, (0, 0, 0))) == 0
    assert is_proper_coloring(EMPTY, Coloring(2, ())) is None

    pair = DirectedHypergraph.from_pairs(2, [((0, 1), ())])
    assert is_polychromatic(pair, Coloring(2, (0, 1)), 2) is None
    assert is_polychromatic(pair, Coloring(2, (0, 0)), 2) == 0

    hs = [pair, pair]
    assert is_rainbow_cover(hs, Coloring(2, (0, 1))) is None
    assert is_rainbow_cover(hs, Coloring(2, (0, 0))) == (1, 0)

    with pytest.raises(ValueError):
        is_proper_coloring(h, Coloring(2, (0, 0)))
    with pytest.raises(ValueError):
        is_polychromatic(pair, Coloring(1, (0, 0)), 2)


def test_witnesses_recheck_in_isolation():
    rng = random.Random(2024)
    seen = {WitnessKind.PROPERTY_S: 0, WitnessKind.SPEC_BOTH: 0, WitnessKind.LINEARITY: 0}
    for _ in range(300):
        h = random_two_one(rng, rng.randint(3, 8), rng.randint(0, 10))
        for checker in (check_property_s, check_specboth, check_linear):
            w = checker(h)
            if w is None or w.vertex is None and w.kind is WitnessKind.HEAD_COUNT:
                continue
            sub = restrict(h, w.edges)
            w2 = checker(sub)
            assert w2 is not None and w2.kind is w.kind
            seen[w.kind] += 1
    assert all(count > 0 for count in seen.values()), seen


def test_property_s_equals_pattern_s_avoidance_sample():
    rng = random.Random(99)
    S_pat = pattern("S").hypergraph
    for _ in range(200):
        h = random_two_one(rng, rng.randint(3, 8), rng.randint(0, 12))
        ok = check_property_s(h) is None
        avoided = contains_subhypergraph(h, S_pat) is None
        assert ok == avoided
