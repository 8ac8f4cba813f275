"""Coloring toolkit for directed hypergraphs.

Library layout:

* :mod:`dhcolor.model` - hypergraph/coloring types, text formats, dedup.
* :mod:`dhcolor.properties` - intersection-hypothesis and coloring checkers.
* :mod:`dhcolor.recolor` - rainbow/polychromatic recoloring, the
  head-of-both flip loop, and the linear-hypergraph peeling colorer.
* :mod:`dhcolor.twocolor` - the structural proper 2-coloring pipeline for
  2->1 hypergraphs passing the pairwise intersection check.
* :mod:`dhcolor.oracle` - brute-force colorability and containment searches.
* :mod:`dhcolor.constructions` - fixed patterns and extremal constructions.
* :mod:`dhcolor.cli` - the ``dhcolor`` command-line tool.
"""
from .constructions import (
    NamedPattern,
    PATTERN_NAMES,
    lower_bound_construction,
    oriented_lower_bound,
    pattern,
    star_construction,
    tightness_construction,
)
from .errors import (
    CapExceeded,
    ConditionViolated,
    HypergraphError,
    ParseError,
    PropertySViolation,
    StructureViolated,
)
from .model import (
    Coloring,
    DedupResult,
    DirectedHyperedge,
    DirectedHypergraph,
    TwoOneEdge,
    VertexId,
    dedup_same_support,
    intersection,
    is_oriented,
    is_two_one,
    normalize_to_two_one,
    parse,
    parse_coloring,
    serialize,
    serialize_coloring,
    two_one,
)
from .oracle import (
    Embedding,
    brute_force_k_colorable,
    brute_force_polychromatic,
    contains_subhypergraph,
)
from .properties import (
    ViolationWitness,
    WitnessKind,
    check_linear,
    check_poly_condition,
    check_property_s,
    check_specboth,
    is_polychromatic,
    is_proper_coloring,
    is_rainbow_cover,
)
from .recolor import (
    RecolorStep,
    RecolorTrace,
    color_linear,
    color_polychromatic,
    color_rainbow,
    color_specboth,
)
from .twocolor import (
    Decomposition,
    LabeledEdge,
    LabeledGraph,
    Orientation,
    OverloadedPair,
    PipelineResult,
    RebelRecord,
    analyze_two_one,
    build_contraction_digraph,
    build_labeled_graph,
    classify_overloaded_pairs,
    color_two_one_property_s,
    compute_cores,
    decompose_residual,
    describe_decomposition,
    orient_edges,
    reduce_to_simple,
    run_phases,
)

__version__ = "0.1.0"
