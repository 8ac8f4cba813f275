"""Labeled-graph structure, decomposition and the phased 2-coloring pipeline."""
from __future__ import annotations

import random

import pytest

from conftest import random_property_s_two_one
from dhcolor import (
    DirectedHypergraph,
    Orientation,
    PropertySViolation,
    StructureViolated,
    analyze_two_one,
    brute_force_k_colorable,
    build_contraction_digraph,
    build_labeled_graph,
    check_property_s,
    classify_overloaded_pairs,
    color_two_one_property_s,
    compute_cores,
    decompose_residual,
    dedup_same_support,
    describe_decomposition,
    is_proper_coloring,
    orient_edges,
    pattern,
    reduce_to_simple,
    two_one,
)
from dhcolor.twocolor import DKind, LabeledEdge, LabeledGraph, PairKind, RKind

S = pattern("S").hypergraph
F0 = pattern("F0").hypergraph


def pipeline_graph(h):
    dd = dedup_same_support(h)
    g = build_labeled_graph(dd.hypergraph)
    pairs = classify_overloaded_pairs(g)
    simple, _ = reduce_to_simple(g, pairs)
    return orient_edges(simple), pairs


def test_build_labeled_graph():
    g = build_labeled_graph(two_one(3, [(0, 1, 2)]))
    assert (g.edges[0].a, g.edges[0].b, g.edges[0].label) == (0, 1, 2)

    g = build_labeled_graph(S)
    assert [(e.a, e.b, e.label) for e in g.edges] == [(0, 1, 2), (0, 3, 4)]

    # The cyclic triangle (not deduped): a triangle with each edge labeled by
    # the opposite vertex.
    g = build_labeled_graph(F0)
    assert sorted((e.pair, e.label) for e in g.edges) == [
        ((0, 1), 2),
        ((0, 2), 1),
        ((1, 2), 0),
    ]

    with pytest.raises(ValueError):
        build_labeled_graph(DirectedHypergraph.from_pairs(4, [((0, 1, 2), (3,))]))


def test_orient_edges_triangle_and_path():
    g = orient_edges(build_labeled_graph(F0))
    assert all(e.orientation is Orientation.BOTH for e in g.edges)

    g = orient_edges(build_labeled_graph(two_one(3, [(0, 1, 2)])))
    assert g.edges[0].orientation is Orientation.UNDIRECTED

    # Path: edge (0,1) labeled 2 and edge (1,2) labeled 0.
    g = orient_edges(build_labeled_graph(two_one(3, [(0, 1, 2), (1, 2, 0)])))
    by_pair = {e.pair: e for e in g.edges}
    assert by_pair[(1, 2)].directed_only_toward(1)
    assert by_pair[(0, 1)].directed_only_toward(1)


def test_classify_overloaded_pairs():
    g, pairs = pipeline_graph(S)
    assert pairs == []

    # Strong pair x=0, y=1 with labels r=2, q=3 and companions (0,3)->2, (1,2)->3.
    strong = two_one(4, [(0, 1, 2), (0, 1, 3), (0, 3, 2), (1, 2, 3)])
    g = build_labeled_graph(dedup_same_support(strong).hypergraph)
    pairs = classify_overloaded_pairs(g)
    assert len(pairs) == 1 and pairs[0].kind is PairKind.STRONG
    p = pairs[0]
    assert (p.x, p.y, p.label_r, p.label_q) == (0, 1, 2, 3)

    # Weak pair: label 4 of one parallel edge appears nowhere else around {0, 1}.
    weak_graph = LabeledGraph(
        6,
        (
            LabeledEdge(0, 1, 2, 0),
            LabeledEdge(0, 1, 4, 1),
            LabeledEdge(0, 5, 2, 2),
        ),
    )
    pairs = classify_overloaded_pairs(weak_graph)
    assert len(pairs) == 1 and pairs[0].kind is PairKind.WEAK
    assert pairs[0].representative == 1  # the edge labeled 4

    simple, removed = reduce_to_simple(weak_graph, pairs)
    assert len(simple.edges) == 2 and removed == {0: 0}

    with pytest.raises(StructureViolated):
        classify_overloaded_pairs(
            LabeledGraph(3, (LabeledEdge(0, 1, 2, 0), LabeledEdge(0, 1, 2, 1)))
        )


def test_strong_pair_reduction_removes_both_parallel_edges():
    strong = two_one(4, [(0, 1, 2), (0, 1, 3), (0, 3, 2), (1, 2, 3)])
    g = build_labeled_graph(dedup_same_support(strong).hypergraph)
    pairs = classify_overloaded_pairs(g)
    simple, removed = reduce_to_simple(g, pairs)
    assert len(simple.edges) == 2
    assert sorted(removed) == [0, 1]


def test_compute_cores():
    # Three edges at one vertex all labeled 4: the core of 4 is {0}.
    star = two_one(5, [(0, 1, 4), (0, 2, 4), (0, 3, 4)])
    g, _ = pipeline_graph(star)
    dec = compute_cores(g)
    assert dec.cores == {4: frozenset({0})}
    assert dec.residual == {1, 2, 3, 4}

    g, _ = pipeline_graph(F0)  # dedups to a single edge: no cores
    dec = compute_cores(g)
    assert dec.cores == {}

    dec = compute_cores(LabeledGraph(3, ()))
    assert dec.cores == {} and dec.residual == {0, 1, 2}


def test_compute_cores_rejects_four_labels():
    g = LabeledGraph(
        9,
        (
            LabeledEdge(0, 1, 5, 0),
            LabeledEdge(0, 2, 6, 1),
            LabeledEdge(0, 3, 7, 2),
            LabeledEdge(0, 4, 8, 3),
        ),
    )
    with pytest.raises(StructureViolated):
        compute_cores(g)


def test_decompose_residual_cycle():
    # Directed 4-cycle: edge {c_i, c_{i+1}} labeled c_{i-1}.
    h = two_one(4, [((i % 4), ((i + 1) % 4), ((i - 1) % 4)) for i in range(4)])
    g, _ = pipeline_graph(h)
    dec = decompose_residual(compute_cores(g))
    (comp,) = dec.r_components
    assert comp.kind is RKind.CYCLE
    assert len(comp.vertices) == 4


def test_decompose_residual_trees():
    g, _ = pipeline_graph(two_one(3, [(0, 1, 2)]))
    dec = decompose_residual(compute_cores(g))
    kinds = {tuple(c.vertices): c for c in dec.r_components}
    edge_comp = kinds[(0, 1)]
    assert edge_comp.kind is RKind.TREE and edge_comp.central == (0, 1)
    assert edge_comp.central_edge is not None  # the undirected edge is central
    singleton = kinds[(2,)]
    assert singleton.central == (2,)


def test_contraction_digraph_shapes():
    # Single core with owner in the residual: a rooted tree component.
    star = two_one(5, [(0, 1, 4), (0, 2, 4), (0, 3, 4)])
    g, _ = pipeline_graph(star)
    dec = build_contraction_digraph(decompose_residual(compute_cores(g)))
    (comp,) = dec.digraph.components
    assert comp.kind is DKind.TREE_ROOTED_IN_R and comp.root == 4

    # Mutual cores: a 2-cycle.
    mutual = two_one(6, [(0, 2, 1), (0, 3, 1), (1, 4, 0), (1, 5, 0)])
    g, _ = pipeline_graph(mutual)
    dec = build_contraction_digraph(decompose_residual(compute_cores(g)))
    (comp,) = dec.digraph.components
    assert comp.kind is DKind.UNICYCLIC and comp.cycle == (0, 1)

    # No cores at all.
    g, _ = pipeline_graph(two_one(3, [(0, 1, 2)]))
    dec = build_contraction_digraph(decompose_residual(compute_cores(g)))
    assert dec.digraph.components == []


def test_pattern_s_is_rejected():
    with pytest.raises(PropertySViolation) as err:
        color_two_one_property_s(S)
    assert err.value.witness.edges == (0, 1)
    assert err.value.witness.vertex == 0


def test_f0_and_star_color():
    col = color_two_one_property_s(F0)
    assert is_proper_coloring(F0, col) is None

    star = two_one(5, [(0, 1, 4), (0, 2, 4), (0, 3, 4)])
    col = color_two_one_property_s(star)
    assert is_proper_coloring(star, col) is None


def test_odd_core_cycle_rebel_and_minions():
    # Cores chained in a directed triangle; vertices 3..8 hang off them.
    base = [(0, 3, 1), (0, 4, 1), (1, 5, 2), (1, 6, 2), (2, 7, 0), (2, 8, 0)]
    res = analyze_two_one(two_one(9, base))
    (rebel,) = res.rebels
    assert (rebel.rebel, rebel.host_core) == (0, 1)
    assert rebel.minions == {3, 4}
    assert res.coloring.colors[0] == 1  # the rebel flips to blue
    assert res.coloring.colors[3] == res.coloring.colors[4] == 0  # minions red

    # A minion whose component is a one-edge directed path into it.
    res = analyze_two_one(two_one(10, base + [(3, 9, 0)]))
    assert is_proper_coloring(res.original, res.coloring) is None
    assert res.coloring.colors[9] != res.coloring.colors[3]

    # Both minions joined by a both-ways central edge labeled by the rebel.
    res = analyze_two_one(two_one(9, base + [(3, 4, 0)]))
    assert is_proper_coloring(res.original, res.coloring) is None
    assert res.coloring.colors[3] == res.coloring.colors[4] == 0


def test_even_core_cycle():
    mutual = two_one(6, [(0, 2, 1), (0, 3, 1), (1, 4, 0), (1, 5, 0)])
    res = analyze_two_one(mutual)
    assert res.rebels == []
    assert is_proper_coloring(mutual, res.coloring) is None
    # Opposite colors across the 2-cycle: members of each core against its owner.
    assert res.coloring.colors[0] != res.coloring.colors[1]


def test_residual_odd_cycle_coloring():
    h = two_one(5, [((i % 5), ((i + 1) % 5), ((i - 1) % 5)) for i in range(5)])
    res = analyze_two_one(h)
    colors = res.coloring.colors
    (comp,) = res.decomposition.r_components
    vs = comp.vertices
    mono = [
        i for i in range(5) if colors[vs[i]] == colors[vs[(i + 1) % 5]]
    ]
    assert len(mono) == 1
    (i,) = mono
    # The monochromatic edge's label is the previous cycle vertex, colored opposite.
    assert colors[vs[(i - 1) % 5]] != colors[vs[i]]
    assert is_proper_coloring(h, res.coloring) is None


def test_strong_pair_both_components_non_singleton():
    # Here q=3 and r=2 stay residual, so 0's component is {0, 3} and 1's is
    # {1, 2}: no phase-3 exception fires and the companions carry the edges.
    strong = two_one(4, [(0, 1, 2), (0, 1, 3), (0, 3, 2), (1, 2, 3)])
    res = analyze_two_one(strong)
    assert is_proper_coloring(strong, res.coloring) is None
    (p,) = res.pairs
    comp_of = res.decomposition.r_component_of
    assert comp_of[p.x] != comp_of[p.y]


def test_strong_pair_singleton_exception_fires():
    # Adding two more 2-labeled edges at vertex 3 puts it in the core of 2,
    # which isolates strong-pair vertex 0 in the residual graph; the phase-3
    # exception must then color 0 opposite to its partner 1.
    h = two_one(6, [(0, 1, 2), (0, 1, 3), (0, 3, 2), (1, 2, 3), (3, 4, 2), (3, 5, 2)])
    res = analyze_two_one(h)
    assert is_proper_coloring(h, res.coloring) is None
    assert res.decomposition.cores == {2: frozenset({3})}
    (p,) = res.pairs
    singleton = {
        v
        for v in (p.x, p.y)
        if len(
            res.decomposition.r_components[res.decomposition.r_component_of[v]].vertices
        )
        == 1
    }
    assert singleton == {0}
    assert res.coloring.colors[0] != res.coloring.colors[1]


def test_normalized_three_uniform_input():
    h = DirectedHypergraph.from_pairs(4, [((0, 1, 2), ()), ((1, 2, 3), ())])
    res = analyze_two_one(h)
    assert is_proper_coloring(h, res.coloring) is None
    assert res.hypergraph is not h


def test_head_containing_intersections_need_no_exception_paths():
    # If every nonempty pairwise intersection contains a head vertex, the
    # labeled graph is parallel-free and no rebel/strong-pair machinery fires.
    rng = random.Random(31)
    checked = 0
    for _ in range(400):
        h = random_property_s_two_one(rng, rng.randint(3, 9), rng.randint(0, 12))
        masks = [e.support for e in h.edges]
        strong_condition = True
        for i in range(len(h.edges)):
            for j in range(i + 1, len(h.edges)):
                inter = masks[i] & masks[j]
                if inter and not (inter & h.edges[i].head or inter & h.edges[j].head):
                    strong_condition = False
                    break
            if not strong_condition:
                break
        if not strong_condition:
            continue
        checked += 1
        res = analyze_two_one(h)
        assert res.pairs == []
        assert is_proper_coloring(h, res.coloring) is None
    assert checked > 50


def test_random_instances_match_oracle():
    rng = random.Random(17)
    for _ in range(150):
        h = random_property_s_two_one(rng, rng.randint(3, 10), rng.randint(0, 18))
        assert check_property_s(h) is None
        res = analyze_two_one(h)
        assert is_proper_coloring(h, res.coloring) is None
        assert brute_force_k_colorable(h, 2) is not None


def test_describe_decomposition_mentions_structure():
    base = [(0, 3, 1), (0, 4, 1), (1, 5, 2), (1, 6, 2), (2, 7, 0), (2, 8, 0)]
    res = analyze_two_one(two_one(9, base))
    report = describe_decomposition(res)
    assert "rebel" in report and "core of" in report and "coloring:" in report
