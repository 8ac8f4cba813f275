"""Structural proper 2-coloring of 2->1 hypergraphs that pass the pairwise check.

The pipeline turns the hypergraph into a labeled multigraph G (one edge per
hyperedge ``ab -> s``: endpoints a, b, label s), removes parallel edges via
the overloaded-pair classification, partially orients the resulting simple
graph G', and splits its vertices into cores and residual vertices:

* the core K(q) of a vertex q is the set of vertices with at least two
  incident edges labeled q; K is the union of all cores, R the rest;
* the components of G'[R] are single directed cycles of length >= 4 or small
  trees with one or two distinguished central vertices;
* contracting every core to a node yields a digraph D whose components are
  reverse trees rooted at a single residual vertex, or core-only components
  with exactly one cycle.

Four phases then assign red/blue: core components with a cycle first (an odd
cycle forces one "rebel" vertex to flip, dragging its residual "minions" to
red), residual cycles, residual trees (with special handling for strong
overloaded pairs), and finally the rooted core trees.

Every structural fact the coloring relies on is asserted at runtime, so a
completed run is a machine check of the case analysis on that instance;
:class:`StructureViolated` marks an input that slipped past the pairwise
check (impossible) or a genuine bug.
"""
from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass, field, replace
from functools import cached_property

from .errors import PropertySViolation, StructureViolated
from .model import (
    Coloring,
    DedupResult,
    DirectedHypergraph,
    dedup_same_support,
    is_two_one,
    normalize_to_two_one,
)
from .properties import check_property_s, is_proper_coloring

RED, BLUE = 0, 1


class Orientation(enum.Enum):
    UNDIRECTED = "undirected"
    TOWARD_A = "toward-a"
    TOWARD_B = "toward-b"
    BOTH = "both"


@dataclass(frozen=True)
class LabeledEdge:
    """Edge of the labeled graph: endpoints a < b, vertex-valued label, orientation.

    ``hyperedge`` is the index of the originating hyperedge in the deduped
    hypergraph.  The label is the hyperedge's head, so it is never an
    endpoint.
    """

    a: int
    b: int
    label: int
    hyperedge: int
    orientation: Orientation = Orientation.UNDIRECTED

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("loop edges cannot occur")
        if self.label in (self.a, self.b):
            raise ValueError("an edge cannot carry one of its endpoints as label")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def other(self, x: int) -> int:
        if x == self.a:
            return self.b
        if x == self.b:
            return self.a
        raise ValueError(f"vertex {x} is not an endpoint")

    def directed_toward(self, x: int) -> bool:
        if self.orientation is Orientation.BOTH:
            return True
        if self.orientation is Orientation.TOWARD_A:
            return x == self.a
        if self.orientation is Orientation.TOWARD_B:
            return x == self.b
        return False

    def directed_only_toward(self, x: int) -> bool:
        return (self.orientation is Orientation.TOWARD_A and x == self.a) or (
            self.orientation is Orientation.TOWARD_B and x == self.b
        )


@dataclass(eq=False)
class LabeledGraph:
    """A multigraph whose edges carry vertex labels; adjacency is cached."""

    n: int
    edges: tuple[LabeledEdge, ...]

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            lists[e.a].append(i)
            lists[e.b].append(i)
        return tuple(tuple(l) for l in lists)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        sets: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            sets[e.a].add(e.b)
            sets[e.b].add(e.a)
        return tuple(frozenset(s) for s in sets)

    @cached_property
    def _pair_to_edge(self) -> dict[tuple[int, int], int]:
        # Meaningful on simple graphs only; parallel edges would collide.
        return {e.pair: i for i, e in enumerate(self.edges)}

    def edge_between(self, u: int, v: int) -> int | None:
        return self._pair_to_edge.get((u, v) if u < v else (v, u))


def build_labeled_graph(h: DirectedHypergraph) -> LabeledGraph:
    """One labeled edge per 2->1 hyperedge: endpoints = tail, label = head."""
    if not is_two_one(h):
        raise ValueError("the labeled graph is only defined for 2->1 hypergraphs")
    edges = []
    for i, e in enumerate(h.edges):
        a, b = sorted(e.tail)
        (s,) = e.head
        edges.append(LabeledEdge(a, b, s, i))
    return LabeledGraph(h.n, tuple(edges))


class PairKind(enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class OverloadedPair:
    """A vertex pair carrying parallel edges of G.

    Weak pairs have a representative edge whose label avoids every other
    label incident to the pair.  Strong pairs consist of exactly two parallel
    edges with labels r, q plus the companion edges (x, q) labeled r and
    (y, r) labeled q, and nothing else at x or y.
    """

    x: int
    y: int
    kind: PairKind
    edge_indices: tuple[int, ...]
    representative: int | None = None
    label_r: int | None = None
    label_q: int | None = None
    companion_x: int | None = None
    companion_y: int | None = None


def classify_overloaded_pairs(g: LabeledGraph) -> list[OverloadedPair]:
    """Find and classify every overloaded pair, asserting the structure each kind forces.

    Also asserts that no two overloaded pairs share a vertex and that
    parallel edges never repeat a label (the input must be support-deduped).
    """
    by_pair: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(g.edges):
        by_pair.setdefault(e.pair, []).append(i)

    pairs: list[OverloadedPair] = []
    for (x, y), idxs in sorted(by_pair.items()):
        if len(idxs) < 2:
            continue
        labels = [g.edges[i].label for i in idxs]
        if len(set(labels)) != len(labels):
            raise StructureViolated(
                f"two hyperedges share the support {{{x}, {y}}} with equal label; "
                "deduplicate supports first"
            )
        near = [j for j in set(g.incident[x]) | set(g.incident[y])]
        candidates = []
        for i in idxs:
            li = g.edges[i].label
            if all(g.edges[j].label != li for j in near if j != i):
                candidates.append(i)
        if candidates:
            rep = min(candidates, key=lambda i: g.edges[i].label)
            pairs.append(OverloadedPair(x, y, PairKind.WEAK, tuple(idxs), representative=rep))
            continue

        # Strong pair: exactly two parallel edges plus one companion per endpoint.
        if len(idxs) != 2:
            raise StructureViolated(
                f"strong overloaded pair {{{x}, {y}}} carries {len(idxs)} parallel edges, expected 2"
            )
        others_x = [j for j in g.incident[x] if j not in idxs]
        others_y = [j for j in g.incident[y] if j not in idxs]
        if len(others_x) != 1 or len(others_y) != 1:
            raise StructureViolated(
                f"strong overloaded pair {{{x}, {y}}} must have exactly one extra edge per endpoint"
            )
        cx, cy = others_x[0], others_y[0]
        parallel_labels = {g.edges[i].label for i in idxs}
        r, q = g.edges[cx].label, g.edges[cy].label
        if (
            {r, q} != parallel_labels
            or g.edges[cx].other(x) != q
            or g.edges[cy].other(y) != r
        ):
            raise StructureViolated(
                f"strong overloaded pair {{{x}, {y}}} lacks the companion structure"
            )
        pairs.append(
            OverloadedPair(
                x,
                y,
                PairKind.STRONG,
                tuple(idxs),
                label_r=r,
                label_q=q,
                companion_x=cx,
                companion_y=cy,
            )
        )

    touched: set[int] = set()
    for p in pairs:
        if p.x in touched or p.y in touched:
            raise StructureViolated(f"overloaded pairs share the vertex {p.x if p.x in touched else p.y}")
        touched.update((p.x, p.y))
    return pairs


def reduce_to_simple(
    g: LabeledGraph, pairs: list[OverloadedPair]
) -> tuple[LabeledGraph, dict[int, int]]:
    """Delete parallel edges: weak pairs keep their representative, strong pairs keep nothing.

    Returns the simple graph and a map from each deleted G-edge index to the
    index (into ``pairs``) of the overloaded pair that caused the deletion.
    """
    removed: dict[int, int] = {}
    for pi, p in enumerate(pairs):
        for i in p.edge_indices:
            if p.kind is PairKind.WEAK and i == p.representative:
                continue
            removed[i] = pi
    kept = tuple(e for i, e in enumerate(g.edges) if i not in removed)
    return LabeledGraph(g.n, kept), removed


def orient_edges(g: LabeledGraph) -> LabeledGraph:
    """Mark each edge's orientation: toward an endpoint iff it is adjacent to the label."""
    oriented = []
    for e in g.edges:
        ta = e.label in g.neighbors[e.a]
        tb = e.label in g.neighbors[e.b]
        if ta and tb:
            o = Orientation.BOTH
        elif ta:
            o = Orientation.TOWARD_A
        elif tb:
            o = Orientation.TOWARD_B
        else:
            o = Orientation.UNDIRECTED
        oriented.append(replace(e, orientation=o))
    return LabeledGraph(g.n, tuple(oriented))


class RKind(enum.Enum):
    CYCLE = "cycle"
    TREE = "tree"


@dataclass(frozen=True)
class RComponent:
    """A connected component of the residual-induced subgraph G'[R].

    For cycles, ``vertices`` lists the cyclic order such that the edge
    between ``vertices[i]`` and ``vertices[i+1]`` is directed only toward
    ``vertices[i]`` (and ``edges[i]`` is that edge); ``central`` is empty.
    For trees, ``vertices`` and ``edges`` are sorted and ``central`` holds
    the one or two central vertices, joined by ``central_edge`` when two.
    """

    kind: RKind
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    central: tuple[int, ...] = ()
    central_edge: int | None = None


class DKind(enum.Enum):
    TREE_ROOTED_IN_R = "tree-rooted-in-r"
    UNICYCLIC = "unicyclic"


@dataclass(frozen=True)
class DComponent:
    kind: DKind
    owners: tuple[int, ...]
    root: int | None = None
    cycle: tuple[int, ...] | None = None


@dataclass
class ContractionDigraph:
    """Cores contracted to single nodes; each core node has exactly one out-edge."""

    target: dict[int, int]  # core owner -> the vertex its owner q "lives at"
    target_in_residual: dict[int, bool]
    components: list[DComponent] = field(default_factory=list)
    component_of_owner: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class RebelRecord:
    """The one core vertex flipped against its component, and its forced-red minions."""

    rebel: int
    host_core: int
    minions: frozenset[int]


@dataclass
class Decomposition:
    """Cores, residual structure and contraction digraph of an oriented simple graph."""

    graph: LabeledGraph
    cores: dict[int, frozenset[int]]
    core_owner: dict[int, int]
    residual: frozenset[int]
    r_components: list[RComponent] | None = None
    r_component_of: dict[int, int] | None = None
    digraph: ContractionDigraph | None = None


def _check_vertex_labels(g: LabeledGraph, x: int) -> None:
    """The local label structure every vertex of a good simple graph must have."""
    edges = [g.edges[i] for i in g.incident[x]]
    count = Counter(e.label for e in edges)
    labels = sorted(count)
    if len(labels) >= 4:
        raise StructureViolated(f"vertex {x} is incident to edges of {len(labels)} labels, at most 3 allowed")
    if len(labels) == 3:
        if len(edges) != 3:
            raise StructureViolated(
                f"vertex {x} has 3 incident labels but {len(edges)} incident edges"
            )
        endpoints = {e.other(x) for e in edges}
        if endpoints != set(labels) or any(e.label == e.other(x) for e in edges):
            raise StructureViolated(
                f"vertex {x} with 3 incident labels lacks the cyclic endpoint/label structure"
            )
    elif len(labels) == 2:
        a, b = labels
        if count[a] >= 2 and count[b] >= 2:
            raise StructureViolated(f"vertex {x} has two labels each on several incident edges")
        ok = any(
            count[e.label] == 1 and e.other(x) == (b if e.label == a else a) for e in edges
        )
        if not ok:
            raise StructureViolated(
                f"vertex {x}: the once-occurring label's edge must end in the other label"
            )


def compute_cores(g: LabeledGraph) -> Decomposition:
    """Find every core K(q) on a simple oriented graph, asserting local label structure.

    K(q) collects the vertices with at least two incident edges labeled q.
    The per-vertex structure makes cores pairwise disjoint, and edges induced
    inside a core K(r) must carry the label r.
    """
    cores: dict[int, set[int]] = {}
    core_owner: dict[int, int] = {}
    for x in range(g.n):
        _check_vertex_labels(g, x)
        count = Counter(g.edges[i].label for i in g.incident[x])
        for q, c in count.items():
            if c >= 2:
                cores.setdefault(q, set()).add(x)
                if x in core_owner:
                    raise StructureViolated(f"vertex {x} belongs to two cores")
                core_owner[x] = q
    for e in g.edges:
        qa, qb = core_owner.get(e.a), core_owner.get(e.b)
        if qa is not None and qa == qb and e.label != qa:
            raise StructureViolated(
                f"edge inside the core of {qa} carries label {e.label}"
            )
    residual = frozenset(range(g.n)) - set(core_owner)
    return Decomposition(
        graph=g,
        cores={q: frozenset(vs) for q, vs in sorted(cores.items())},
        core_owner=core_owner,
        residual=residual,
    )


def _check_residual_local_structure(dec: Decomposition, r_edge_set: set[int]) -> None:
    g = dec.graph
    for x in sorted(dec.residual):
        not_toward = [i for i in g.incident[x] if not g.edges[i].directed_toward(x)]
        if len(not_toward) > 1:
            raise StructureViolated(
                f"residual vertex {x} has {len(not_toward)} incident edges not directed toward it"
            )
    for i in sorted(r_edge_set):
        e = g.edges[i]
        if e.orientation is Orientation.BOTH:
            c = e.label
            if c in dec.residual:
                raise StructureViolated(
                    f"label {c} of the both-ways residual edge ({e.a}, {e.b}) must not be residual"
                )
            ia, ib = g.edge_between(e.a, c), g.edge_between(e.b, c)
            if ia is None or ib is None:
                raise StructureViolated(f"orientation of edge ({e.a}, {e.b}) lost its witnesses")
            la, lb = g.edges[ia].label, g.edges[ib].label
            if la != lb or la in (e.a, e.b):
                raise StructureViolated(
                    f"witness edges of the both-ways residual edge ({e.a}, {e.b}) disagree on labels"
                )
    r_incident: dict[int, list[int]] = {x: [] for x in dec.residual}
    for i in sorted(r_edge_set):
        e = g.edges[i]
        r_incident[e.a].append(i)
        r_incident[e.b].append(i)
    for x in sorted(dec.residual):
        for i in r_incident[x]:
            e = g.edges[i]
            if e.directed_only_toward(x):
                continue
            others = [j for j in r_incident[x] if j != i]
            if len(others) > 1:
                raise StructureViolated(
                    f"residual vertex {x} keeps several edges besides one not directed only toward it"
                )
            for j in others:
                f = g.edges[j]
                if f.label != e.other(x) or not f.directed_only_toward(x):
                    raise StructureViolated(
                        f"the extra residual edge at vertex {x} must point at it and be "
                        f"labeled by the far endpoint {e.other(x)}"
                    )


def decompose_residual(dec: Decomposition) -> Decomposition:
    """Classify the components of G'[R] as directed cycles or centered trees.

    Asserts the local residual structure first (every residual vertex has at
    most one incident edge not pointing at it; both-ways residual edges have
    non-residual labels with agreeing witness edges; an edge not directed
    only toward a vertex caps and constrains its other residual edges), then
    the per-component shape.
    """
    g = dec.graph
    r_edge_set = {
        i for i, e in enumerate(g.edges) if e.a in dec.residual and e.b in dec.residual
    }
    _check_residual_local_structure(dec, r_edge_set)

    r_incident: dict[int, list[int]] = {x: [] for x in dec.residual}
    for i in sorted(r_edge_set):
        e = g.edges[i]
        r_incident[e.a].append(i)
        r_incident[e.b].append(i)

    components: list[RComponent] = []
    component_of: dict[int, int] = {}
    seen: set[int] = set()
    for start in sorted(dec.residual):
        if start in seen:
            continue
        verts = []
        queue = deque([start])
        seen.add(start)
        comp_edges: set[int] = set()
        while queue:
            v = queue.popleft()
            verts.append(v)
            for i in r_incident[v]:
                comp_edges.add(i)
                w = g.edges[i].other(v)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comp = _classify_r_component(g, sorted(verts), sorted(comp_edges))
        for v in verts:
            component_of[v] = len(components)
        components.append(comp)

    dec.r_components = components
    dec.r_component_of = component_of
    return dec


def _classify_r_component(g: LabeledGraph, verts: list[int], edge_idxs: list[int]) -> RComponent:
    if len(edge_idxs) == len(verts):
        return _classify_r_cycle(g, verts, edge_idxs)
    if len(edge_idxs) == len(verts) - 1:
        return _classify_r_tree(g, verts, edge_idxs)
    raise StructureViolated(
        f"residual component on {len(verts)} vertices has {len(edge_idxs)} edges; "
        "only trees and single cycles can occur"
    )


def _classify_r_cycle(g: LabeledGraph, verts: list[int], edge_idxs: list[int]) -> RComponent:
    degree = Counter()
    in_edge: dict[int, int] = {}
    for i in edge_idxs:
        e = g.edges[i]
        degree[e.a] += 1
        degree[e.b] += 1
        if not (e.directed_only_toward(e.a) or e.directed_only_toward(e.b)):
            raise StructureViolated(
                f"residual cycle edge ({e.a}, {e.b}) must be directed exactly one way"
            )
        head = e.a if e.directed_only_toward(e.a) else e.b
        if head in in_edge:
            raise StructureViolated(f"residual cycle vertex {head} has two inbound edges")
        in_edge[head] = i
    if any(degree[v] != 2 for v in verts):
        raise StructureViolated("residual component with as many edges as vertices is not a cycle")
    if len(verts) < 4:
        raise StructureViolated(f"residual cycle of length {len(verts)} found, minimum is 4")
    if set(in_edge) != set(verts):
        raise StructureViolated("residual cycle is not directed cyclically")

    start = min(verts)
    order = [start]
    cycle_edges = []
    cur = start
    for _ in range(len(verts)):
        i = in_edge[cur]
        cycle_edges.append(i)
        cur = g.edges[i].other(cur)
        if cur == start:
            break
        order.append(cur)
    if len(order) != len(verts):
        raise StructureViolated("residual cycle edges do not form a single cycle")
    k = len(order)
    for idx in range(k):
        e = g.edges[cycle_edges[idx]]
        expected = order[(idx - 1) % k]
        if e.label != expected:
            raise StructureViolated(
                f"residual cycle edge ({e.a}, {e.b}) is labeled {e.label}, expected the "
                f"previous cycle vertex {expected}"
            )
    return RComponent(RKind.CYCLE, tuple(order), tuple(cycle_edges))


def _classify_r_tree(g: LabeledGraph, verts: list[int], edge_idxs: list[int]) -> RComponent:
    incident: dict[int, list[int]] = {v: [] for v in verts}
    for i in edge_idxs:
        incident[g.edges[i].a].append(i)
        incident[g.edges[i].b].append(i)

    special = [
        i
        for i in edge_idxs
        if g.edges[i].orientation in (Orientation.UNDIRECTED, Orientation.BOTH)
    ]
    if len(special) > 1:
        raise StructureViolated("residual tree with two undirected or both-ways edges cannot occur")
    if special:
        central_edge = special[0]
        e = g.edges[central_edge]
        central = tuple(sorted((e.a, e.b)))
        for z in central:
            rest = [j for j in incident[z] if j != central_edge]
            if len(rest) > 1 or any(not g.edges[j].directed_only_toward(z) for j in rest):
                raise StructureViolated(
                    f"edges at central vertex {z} must all point at it besides the central edge"
                )
    else:
        central_edge = None
        candidates = [
            v for v in verts if all(g.edges[i].directed_only_toward(v) for i in incident[v])
        ]
        if len(candidates) != 1:
            raise StructureViolated(
                f"residual tree must have exactly one all-inbound vertex, found {len(candidates)}"
            )
        central = (candidates[0],)
        if len(incident[central[0]]) > 3:
            raise StructureViolated(f"central vertex {central[0]} has degree above 3")

    for y in verts:
        if y in central:
            continue
        away = [i for i in incident[y] if g.edges[i].directed_only_toward(g.edges[i].other(y))]
        toward = [i for i in incident[y] if g.edges[i].directed_only_toward(y)]
        if len(away) != 1 or len(toward) > 1 or len(away) + len(toward) != len(incident[y]):
            raise StructureViolated(
                f"non-central residual vertex {y} must have one outbound edge and at most "
                "one inbound edge"
            )
    return RComponent(RKind.TREE, tuple(verts), tuple(edge_idxs), central, central_edge)


def build_contraction_digraph(dec: Decomposition) -> Decomposition:
    """Contract every core to a node with one out-edge; classify the components.

    A component containing a residual vertex is a reverse tree rooted there;
    a component without one contains exactly one cycle (2-cycles allowed).
    """
    owners = sorted(dec.cores)
    target: dict[int, int] = {}
    target_in_r: dict[int, bool] = {}
    for q in owners:
        if q in dec.residual:
            target[q], target_in_r[q] = q, True
        else:
            target[q], target_in_r[q] = dec.core_owner[q], False

    adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for q in owners:
        src = ("k", q)
        dst = ("r", q) if target_in_r[q] else ("k", target[q])
        adjacency.setdefault(src, []).append(dst)
        adjacency.setdefault(dst, []).append(src)

    digraph = ContractionDigraph(target, target_in_r)
    seen: set[tuple[str, int]] = set()
    for q0 in owners:
        if ("k", q0) in seen:
            continue
        nodes = []
        queue = deque([("k", q0)])
        seen.add(("k", q0))
        while queue:
            node = queue.popleft()
            nodes.append(node)
            for nxt in adjacency[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        comp_owners = sorted(q for kind, q in nodes if kind == "k")
        roots = sorted(v for kind, v in nodes if kind == "r")
        if roots:
            if len(roots) != 1:
                raise StructureViolated(
                    f"core component touches several residual vertices: {roots}"
                )
            comp = DComponent(DKind.TREE_ROOTED_IN_R, tuple(comp_owners), root=roots[0])
        else:
            walk_seen: dict[int, int] = {}
            path = []
            cur = comp_owners[0]
            while cur not in walk_seen:
                walk_seen[cur] = len(path)
                path.append(cur)
                cur = target[cur]
            cycle = path[walk_seen[cur] :]
            pivot = cycle.index(min(cycle))
            cycle = cycle[pivot:] + cycle[:pivot]
            comp = DComponent(DKind.UNICYCLIC, tuple(comp_owners), cycle=tuple(cycle))
        idx = len(digraph.components)
        digraph.components.append(comp)
        for q in comp_owners:
            digraph.component_of_owner[q] = idx
    dec.digraph = digraph
    return dec


def _alternating_bfs(adjacency, start, start_color, what: str):
    color = {start: start_color}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adjacency.get(u, ()):
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                raise StructureViolated(f"{what} is not 2-colorable")
    return color


def _is_singleton(dec: Decomposition, v: int) -> bool:
    return len(dec.r_components[dec.r_component_of[v]].vertices) == 1


def _assert_minion_component(
    dec: Decomposition,
    pair_at: dict[int, OverloadedPair],
    x: int,
    rebel: int,
    host: int,
    minions: set[int],
) -> None:
    """A minion's residual component is a directed path ending in it, or a single
    both-ways edge labeled by the rebel whose far endpoint is a minion too; a
    minion on a strong overloaded pair forces both pair vertices into
    singleton components (weak pairs leave the component shape unconstrained
    beyond the above, since their representative edge stays in the graph)."""
    g = dec.graph
    comp = dec.r_components[dec.r_component_of[x]]
    if x in pair_at and pair_at[x].kind is PairKind.STRONG:
        p = pair_at[x]
        y = p.y if x == p.x else p.x
        if len(comp.vertices) != 1:
            raise StructureViolated(
                f"minion {x} of rebel {rebel} sits on a strong overloaded pair but not in a "
                "singleton residual component"
            )
        if y not in dec.residual or not _is_singleton(dec, y):
            raise StructureViolated(
                f"partner {y} of the strongly overloaded minion {x} must be a singleton "
                "residual component"
            )
        return
    if comp.kind is RKind.CYCLE:
        raise StructureViolated(f"minion {x} of rebel {rebel} lies on a residual cycle")
    if len(comp.vertices) == 1:
        return
    if comp.central_edge is not None:
        e = g.edges[comp.central_edge]
        if len(comp.vertices) != 2 or x not in (e.a, e.b):
            raise StructureViolated(
                f"minion {x} with a central edge must live in a single-edge component"
            )
        if e.label != rebel or e.orientation is not Orientation.BOTH:
            raise StructureViolated(
                f"central edge of minion {x} must be labeled by the rebel {rebel} and "
                "directed both ways"
            )
        y = e.other(x)
        has_companion = any(
            g.edges[i].label == host and g.edges[i].other(rebel) == y
            for i in g.incident[rebel]
        )
        if not has_companion or y not in minions:
            raise StructureViolated(
                f"far endpoint {y} of minion {x}'s central edge must be a minion of the same rebel"
            )
        return
    if comp.central != (x,):
        raise StructureViolated(f"minion {x} must be the central vertex of its component")
    deg = sum(1 for i in comp.edges if x in (g.edges[i].a, g.edges[i].b))
    if deg > 1:
        raise StructureViolated(
            f"minion {x}'s component must be a directed path ending in it, found degree {deg}"
        )


def run_phases(
    dec: Decomposition, pairs: list[OverloadedPair]
) -> tuple[Coloring, list[RebelRecord]]:
    """Execute the four coloring phases on a full decomposition.

    Phase 1 colors core components with a cycle (flipping a rebel on odd
    cycles and recording its minions), phase 2 the residual cycles, phase 3
    the residual trees (minion centrals red, strong-pair partners opposite),
    phase 4 the rooted core trees from their residual roots.
    """
    g = dec.graph
    colors: list[int | None] = [None] * g.n
    rebels: list[RebelRecord] = []
    pair_at: dict[int, OverloadedPair] = {}
    for p in pairs:
        pair_at[p.x] = p
        pair_at[p.y] = p

    # Phase 1: core components containing a cycle.
    for comp in dec.digraph.components:
        if comp.kind is not DKind.UNICYCLIC:
            continue
        adjacency: dict[int, list[int]] = {}
        cycle = comp.cycle
        cycle_edges = {(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
        skip: tuple[int, int] | None = None
        if len(cycle) % 2 == 1:
            skip = min(cycle_edges)
        for q in comp.owners:
            edge = (q, dec.digraph.target[q])
            if edge == skip:
                continue
            adjacency.setdefault(edge[0], []).append(edge[1])
            adjacency.setdefault(edge[1], []).append(edge[0])
        start = skip[0] if skip is not None else min(comp.owners)
        node_color = _alternating_bfs(adjacency, start, RED, "core cycle component")
        if skip is not None and node_color[skip[1]] != RED:
            raise StructureViolated(
                "the endpoints of the removed core-cycle edge must both come out red"
            )
        for q in comp.owners:
            for v in sorted(dec.cores[q]):
                colors[v] = node_color[q]
        if skip is not None:
            rebel, host = skip
            if colors[rebel] != RED:
                raise StructureViolated(f"rebel {rebel} should inherit red before flipping")
            colors[rebel] = BLUE
            minions = {
                g.edges[i].other(rebel)
                for i in g.incident[rebel]
                if g.edges[i].label == host and g.edges[i].other(rebel) in dec.residual
            }
            for x in sorted(minions):
                _assert_minion_component(dec, pair_at, x, rebel, host, minions)
            rebels.append(RebelRecord(rebel, host, frozenset(minions)))

    minion_set = {x for r in rebels for x in r.minions}

    # Phase 2: residual cycles, alternating except one chosen pair on odd cycles.
    over_sets = {frozenset((p.x, p.y)) for p in pairs}
    for comp in dec.r_components:
        if comp.kind is not RKind.CYCLE:
            continue
        vs = comp.vertices
        k = len(vs)
        if k % 2 == 0:
            for i, v in enumerate(vs):
                colors[v] = i % 2
            continue
        eligible = [i for i in range(k) if frozenset((vs[i], vs[(i + 1) % k])) not in over_sets]
        if not eligible:
            raise StructureViolated(
                "odd residual cycle has no edge off the overloaded pairs to leave monochromatic"
            )
        j = min(eligible, key=lambda i: comp.edges[i])
        for t in range(k):
            colors[vs[(j + 1 + t) % k]] = t % 2

    # Phase 3: residual trees.
    deferred: dict[int, int] = {}
    for p in pairs:
        if p.kind is not PairKind.STRONG:
            continue
        x, y = p.x, p.y
        for z in (x, y):
            if z not in dec.residual or dec.r_components[dec.r_component_of[z]].kind is RKind.CYCLE:
                raise StructureViolated(f"strong pair vertex {z} must be a residual tree vertex")
        sx, sy = _is_singleton(dec, x), _is_singleton(dec, y)
        mx, my = x in minion_set, y in minion_set
        if sx and sy:
            if mx and my:
                raise StructureViolated(
                    f"both vertices of the strong pair ({x}, {y}) are minions"
                )
            if my or (not mx and y < x):
                x, y = y, x
            deferred[y] = x
        elif sx or sy:
            if mx or my:
                raise StructureViolated(
                    f"a minion on the strong pair ({x}, {y}) forces both components to singletons"
                )
            if sx:
                x, y = y, x
            deferred[y] = x

    for comp in dec.r_components:
        if comp.kind is not RKind.TREE:
            continue
        if len(comp.vertices) == 1:
            v = comp.vertices[0]
            if v not in deferred:
                colors[v] = RED
            continue
        forced = [v for v in comp.central if v in minion_set]
        if comp.central_edge is not None and len(forced) == 2:
            for v in comp.vertices:
                colors[v] = RED
            continue
        if comp.central_edge is not None and len(forced) == 1:
            raise StructureViolated(
                "a lone minion on a central edge cannot occur; its partner must be a minion too"
            )
        adjacency: dict[int, list[int]] = {}
        for i in comp.edges:
            e = g.edges[i]
            adjacency.setdefault(e.a, []).append(e.b)
            adjacency.setdefault(e.b, []).append(e.a)
        start = forced[0] if forced else comp.central[0]
        for v, c in _alternating_bfs(adjacency, start, RED, "residual tree").items():
            colors[v] = c

    for x in sorted(minion_set):
        if colors[x] != RED:
            raise StructureViolated(f"minion {x} did not end up red")
    for y in sorted(deferred):
        x = deferred[y]
        if colors[x] is None:
            raise StructureViolated(f"strong-pair anchor {x} is uncolored")
        colors[y] = 1 - colors[x]

    # Phase 4: rooted core trees inherit alternating colors from their residual root.
    for comp in dec.digraph.components:
        if comp.kind is not DKind.TREE_ROOTED_IN_R:
            continue
        root = comp.root
        if colors[root] is None:
            raise StructureViolated(f"residual root {root} is uncolored before phase 4")
        adjacency: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for q in comp.owners:
            src = ("k", q)
            dst = (
                ("r", dec.digraph.target[q])
                if dec.digraph.target_in_residual[q]
                else ("k", dec.digraph.target[q])
            )
            adjacency.setdefault(src, []).append(dst)
            adjacency.setdefault(dst, []).append(src)
        node_color = _alternating_bfs(adjacency, ("r", root), colors[root], "rooted core tree")
        for q in comp.owners:
            for v in sorted(dec.cores[q]):
                colors[v] = node_color[("k", q)]

    if any(c is None for c in colors):
        missing = [v for v, c in enumerate(colors) if c is None]
        raise StructureViolated(f"vertices left uncolored: {missing}")
    for r in sorted(dec.cores):
        same = [v for v in sorted(dec.cores[r]) if colors[v] == colors[r]]
        if len(same) > 1:
            raise StructureViolated(
                f"core of {r} has several vertices sharing {r}'s color: {same}"
            )
    return Coloring(2, tuple(colors)), rebels


@dataclass
class PipelineResult:
    """Everything the structural pipeline computed on the way to the coloring."""

    original: DirectedHypergraph
    hypergraph: DirectedHypergraph  # 2->1 form actually processed
    dedup: DedupResult
    multigraph: LabeledGraph
    pairs: list[OverloadedPair]
    removed_edges: dict[int, int]
    decomposition: Decomposition
    rebels: list[RebelRecord]
    coloring: Coloring


def analyze_two_one(h: DirectedHypergraph) -> PipelineResult:
    """Run the full structural pipeline and return all intermediate structure.

    Raises :class:`PropertySViolation` when the pairwise check fails, and
    :class:`StructureViolated` if any internal assertion fires afterwards
    (which the pairwise check is proven to rule out).  Inputs that are
    3-uniform but not 2->1 are normalized first when possible.
    """
    original = h
    if not is_two_one(h):
        h = normalize_to_two_one(h)
    witness = check_property_s(h)
    if witness is not None:
        raise PropertySViolation(witness)
    dd = dedup_same_support(h)
    g = build_labeled_graph(dd.hypergraph)
    pairs = classify_overloaded_pairs(g)
    simple, removed = reduce_to_simple(g, pairs)
    simple = orient_edges(simple)
    dec = compute_cores(simple)
    decompose_residual(dec)
    build_contraction_digraph(dec)
    coloring, rebels = run_phases(dec, pairs)
    bad = is_proper_coloring(original, coloring)
    if bad is not None:
        raise StructureViolated(
            f"pipeline produced a coloring that leaves hyperedge {bad} monochromatic"
        )
    return PipelineResult(
        original=original,
        hypergraph=h,
        dedup=dd,
        multigraph=g,
        pairs=pairs,
        removed_edges=removed,
        decomposition=dec,
        rebels=rebels,
        coloring=coloring,
    )


def color_two_one_property_s(h: DirectedHypergraph) -> Coloring:
    """Proper 2-coloring of a 2->1 hypergraph passing the pairwise intersection check."""
    return analyze_two_one(h).coloring


def describe_decomposition(result: PipelineResult) -> str:
    """Plain-text diagnostic report of the decomposition behind a coloring."""
    dec = result.decomposition
    h = result.hypergraph
    name = h.name_of
    rebels = {r.rebel: r for r in result.rebels}
    minions = {x for r in result.rebels for x in r.minions}
    lines = [f"vertices: {h.n}", f"hyperedges: {len(h.edges)} ({len(result.dedup.kept)} after dedup)"]
    for p in result.pairs:
        extra = (
            f" representative=edge{p.representative}"
            if p.kind is PairKind.WEAK
            else f" labels=({name(p.label_r)}, {name(p.label_q)})"
        )
        lines.append(f"overloaded pair {{{name(p.x)}, {name(p.y)}}}: {p.kind.value}{extra}")
    for q in sorted(dec.cores):
        members = " ".join(name(v) for v in sorted(dec.cores[q]))
        kind = dec.digraph.components[dec.digraph.component_of_owner[q]].kind.value
        lines.append(f"core of {name(q)} [{kind}]: {members}")
    for idx, comp in enumerate(dec.r_components):
        if comp.kind is RKind.CYCLE:
            lines.append(
                f"residual cycle {idx}: " + " ".join(name(v) for v in comp.vertices)
            )
        else:
            tags = []
            for v in comp.vertices:
                flags = "".join(
                    tag
                    for tag, cond in (
                        ("c", v in comp.central),
                        ("m", v in minions),
                    )
                    if cond
                )
                tags.append(name(v) + (f"[{flags}]" if flags else ""))
            lines.append(f"residual tree {idx}: " + " ".join(tags))
    for r in result.rebels:
        lines.append(
            f"rebel {name(r.rebel)} in core of {name(r.host_core)}, minions: "
            + (" ".join(name(x) for x in sorted(r.minions)) or "(none)")
        )
    lines.append(
        "coloring: "
        + " ".join(f"{name(v)}={'red' if c == RED else 'blue'}" for v, c in enumerate(result.coloring.colors))
    )
    return "\n".join(lines) + "\n"
