"""Core data model for directed hypergraphs and vertex colorings.

A directed hypergraph is a hypergraph in which the vertex set of every
hyperedge is split into two disjoint parts, a *tail* and a *head* (either
part may be empty, but not both).  Hyperedges whose tail has exactly two
vertices and whose head has exactly one are called 2->1 hyperedges; the
hyperedge with tail {a, b} and head {c} is conventionally written
``a b -> c``.

Vertices are dense integer indices ``0..n-1`` internally.  External string
tokens are kept alongside for parsing and serialization; when absent the
token of vertex ``v`` is ``str(v)``.

Text formats
------------
Hypergraph file: one hyperedge per line, ``<tail tokens> -> <head tokens>``
with whitespace-separated tokens.  Lines starting with ``#`` are comments,
blank lines are ignored.  Either side of ``->`` may be empty.

Coloring file: one ``<vertex token> <color int>`` pair per line, same
comment and blank-line rules.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

VertexId = int


def _check_token(token: str) -> str:
    if not token or token != token.strip() or any(ch.isspace() for ch in token):
        raise ValueError(f"invalid vertex token {token!r}")
    if token == "->" or token.startswith("#"):
        raise ValueError(f"reserved vertex token {token!r}")
    return token


@dataclass(frozen=True)
class DirectedHyperedge:
    """A hyperedge with disjoint tail and head vertex sets, at least one vertex total."""

    tail: frozenset[int]
    head: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "tail", frozenset(self.tail))
        object.__setattr__(self, "head", frozenset(self.head))
        if self.tail & self.head:
            raise ValueError("tail and head must be disjoint")
        if not self.tail and not self.head:
            raise ValueError("hyperedge must contain at least one vertex")

    @property
    def support(self) -> frozenset[int]:
        """All vertices of the hyperedge, tail and head together."""
        return self.tail | self.head


@dataclass(frozen=True)
class TwoOneEdge:
    """Convenience view of a 2->1 hyperedge ``tail_a tail_b -> head``."""

    tail_a: int
    tail_b: int
    head: int

    def __post_init__(self):
        if len({self.tail_a, self.tail_b, self.head}) != 3:
            raise ValueError("the three vertices of a 2->1 hyperedge must be distinct")

    def as_hyperedge(self) -> DirectedHyperedge:
        return DirectedHyperedge(frozenset((self.tail_a, self.tail_b)), frozenset((self.head,)))


@dataclass(frozen=True)
class DirectedHypergraph:
    """A vertex count plus an ordered list of hyperedges.

    Duplicate hyperedges are allowed and meaningful (checkers treat them as
    distinct).  Edge order is preserved; all deterministic tie-breaking
    downstream relies on it.
    """

    n: int
    edges: tuple[DirectedHyperedge, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for i, e in enumerate(self.edges):
            for v in e.support:
                if not 0 <= v < self.n:
                    raise ValueError(f"edge {i} references vertex {v} outside 0..{self.n - 1}")
        if self.names is not None:
            names = tuple(self.names)
            object.__setattr__(self, "names", names)
            if len(names) != self.n:
                raise ValueError("need exactly one token per vertex")
            for t in names:
                _check_token(t)
            if len(set(names)) != self.n:
                raise ValueError("vertex tokens must be unique")

    @classmethod
    def from_pairs(cls, n, pairs, names=None) -> "DirectedHypergraph":
        """Build from ``(tail iterable, head iterable)`` pairs."""
        return cls(n, tuple(DirectedHyperedge(frozenset(t), frozenset(h)) for t, h in pairs), names)

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def token_index(self) -> dict[str, int]:
        return {self.name_of(v): v for v in range(self.n)}

    def two_one_edges(self) -> list[TwoOneEdge]:
        """The edges as ``TwoOneEdge`` triples; raises if any edge is not 2->1."""
        out = []
        for i, e in enumerate(self.edges):
            if len(e.tail) != 2 or len(e.head) != 1:
                raise ValueError(f"edge {i} is not a 2->1 hyperedge")
            a, b = sorted(e.tail)
            (c,) = e.head
            out.append(TwoOneEdge(a, b, c))
        return out


def two_one(n, triples, names=None) -> DirectedHypergraph:
    """Shorthand for a 2->1 hypergraph from ``(tail_a, tail_b, head)`` triples."""
    return DirectedHypergraph.from_pairs(n, [((a, b), (c,)) for a, b, c in triples], names)


@dataclass(frozen=True)
class Coloring:
    """A total assignment of colors ``0..num_colors-1`` to vertices ``0..n-1``."""

    num_colors: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.num_colors:
                raise ValueError(f"vertex {v} has color {c} outside 0..{self.num_colors - 1}")

    def color_of(self, v: int) -> int:
        return self.colors[v]


def is_two_one(h: DirectedHypergraph) -> bool:
    """True iff every hyperedge has exactly two tail vertices and one head vertex."""
    return all(len(e.tail) == 2 and len(e.head) == 1 for e in h.edges)


def is_oriented(h: DirectedHypergraph) -> bool:
    """True iff no two hyperedges of a 2->1 hypergraph share the same 3-vertex support."""
    if not is_two_one(h):
        raise ValueError("orientation is only defined for 2->1 hypergraphs")
    seen = set()
    for e in h.edges:
        if e.support in seen:
            return False
        seen.add(e.support)
    return True


def intersection(e1: DirectedHyperedge, e2: DirectedHyperedge) -> frozenset[int]:
    """Vertex-set intersection of two hyperedges (tails and heads together)."""
    return e1.support & e2.support


@dataclass(frozen=True)
class DedupResult:
    """Output of :func:`dedup_same_support`.

    ``kept`` lists the original indices of the surviving edges in output
    order; ``representative[i]`` is, for every original edge ``i``, the
    original index of the surviving edge with the same support (``i`` itself
    when it survived).
    """

    hypergraph: DirectedHypergraph
    kept: tuple[int, ...]
    representative: tuple[int, ...]


def dedup_same_support(h: DirectedHypergraph) -> DedupResult:
    """Keep the first hyperedge of every distinct vertex-set support.

    A proper coloring never depends on the tail/head split, so any proper
    coloring of the result is a proper coloring of the input.
    """
    first: dict[frozenset[int], int] = {}
    kept: list[int] = []
    rep: list[int] = []
    edges: list[DirectedHyperedge] = []
    for i, e in enumerate(h.edges):
        j = first.setdefault(e.support, i)
        rep.append(j)
        if j == i:
            kept.append(i)
            edges.append(e)
    return DedupResult(DirectedHypergraph(h.n, tuple(edges), h.names), tuple(kept), tuple(rep))


def normalize_to_two_one(h: DirectedHypergraph) -> DirectedHypergraph:
    """Rewrite a 3-uniform hypergraph with head-minority edges into 2->1 form.

    Edges that are already 2->1 pass through.  A 3-uniform edge with an empty
    head has its smallest tail vertex promoted to the head; this keeps the
    support unchanged (so proper colorings transfer back) and can only relax
    the pairwise intersection condition, never break it.  Any other edge
    shape is rejected.
    """
    out = []
    for i, e in enumerate(h.edges):
        if len(e.tail) == 2 and len(e.head) == 1:
            out.append(e)
        elif len(e.tail) == 3 and not e.head:
            v = min(e.tail)
            out.append(DirectedHyperedge(e.tail - {v}, frozenset((v,))))
        else:
            raise ValueError(f"edge {i} cannot be normalized to 2->1 form")
    return DirectedHypergraph(h.n, tuple(out), h.names)


def parse(text: str) -> DirectedHypergraph:
    """Parse the hypergraph text format; tokens are indexed in order of appearance."""
    index: dict[str, int] = {}
    order: list[str] = []
    edges: list[DirectedHyperedge] = []

    def vid(token: str, lineno: int) -> int:
        try:
            _check_token(token)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if token not in index:
            index[token] = len(order)
            order.append(token)
        return index[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens.count("->") != 1:
            raise ParseError("expected exactly one '->' separator", lineno)
        sep = tokens.index("->")
        tail_tokens, head_tokens = tokens[:sep], tokens[sep + 1 :]
        if not tail_tokens and not head_tokens:
            raise ParseError("hyperedge must contain at least one vertex", lineno)
        if len(set(tail_tokens) | set(head_tokens)) != len(tail_tokens) + len(head_tokens):
            raise ParseError("repeated vertex within a hyperedge", lineno)
        tail = frozenset(vid(t, lineno) for t in tail_tokens)
        head = frozenset(vid(t, lineno) for t in head_tokens)
        edges.append(DirectedHyperedge(tail, head))
    return DirectedHypergraph(len(order), tuple(edges), tuple(order))


def serialize(h: DirectedHypergraph) -> str:
    """Render in the hypergraph text format, tokens sorted by vertex index.

    Vertices that occur in no hyperedge have no representation in the format
    and are lost on a round trip.
    """
    lines = []
    for e in h.edges:
        tail = " ".join(h.name_of(v) for v in sorted(e.tail))
        head = " ".join(h.name_of(v) for v in sorted(e.head))
        lines.append(f"{tail} -> {head}".strip())
    return "\n".join(lines) + ("\n" if lines else "")


def parse_coloring(text: str, h: DirectedHypergraph, num_colors: int | None = None) -> Coloring:
    """Parse a coloring file against the vertex tokens of ``h``.

    The assignment must be total.  ``num_colors`` defaults to one more than
    the largest color mentioned.
    """
    tok2idx = h.token_index()
    assignment: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected '<vertex> <color>'", lineno)
        token, color_text = parts
        if token not in tok2idx:
            raise ParseError(f"unknown vertex {token!r}", lineno)
        v = tok2idx[token]
        if v in assignment:
            raise ParseError(f"vertex {token!r} colored twice", lineno)
        try:
            color = int(color_text)
        except ValueError:
            raise ParseError(f"color {color_text!r} is not an integer", lineno) from None
        if color < 0:
            raise ParseError("colors must be non-negative", lineno)
        assignment[v] = color
    missing = [h.name_of(v) for v in range(h.n) if v not in assignment]
    if missing:
        raise ParseError(f"no color for vertices: {' '.join(missing)}")
    c = num_colors if num_colors is not None else (max(assignment.values(), default=0) + 1)
    return Coloring(c, tuple(assignment[v] for v in range(h.n)))


def serialize_coloring(coloring: Coloring, h: DirectedHypergraph) -> str:
    if len(coloring.colors) != h.n:
        raise ValueError("coloring does not match the hypergraph's vertex count")
    lines = [f"{h.name_of(v)} {coloring.colors[v]}" for v in range(h.n)]
    return "\n".join(lines) + ("\n" if lines else "")
