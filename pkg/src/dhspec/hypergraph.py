"""Directed hypergraph data model, degree statistics, and connectivity.

A directed hyperedge splits its vertex set into a nonempty tail and a
nonempty disjoint head; direction runs tail to head.  Vertex ids are
1-based.  Edges keep their input order and are addressed by position.

The strict model additionally requires any two edges to cover different
vertex sets.  Some natural families (for example the cyclic 3-uniform
hypergraph on three vertices, whose edges all cover {1,2,3}) violate that
requirement while every degree and tensor construction still makes sense,
so :func:`validate` takes ``require_distinct_unions`` to relax it
explicitly.  Operations that genuinely need distinct unions, such as
:func:`underlying_undirected`, raise :class:`UndirectedCollision` when two
unions coincide.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .errors import (
    DuplicateVertexSet,
    EmptyTailOrHead,
    NoEdges,
    ParseError,
    UndirectedCollision,
    VertexOutOfRange,
)
from ._graphs import is_strongly_connected_digraph, reachable_from


@dataclass(frozen=True)
class DirectedEdge:
    """A tail/head-partitioned hyperedge."""

    tail: frozenset[int]
    head: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "tail", frozenset(self.tail))
        object.__setattr__(self, "head", frozenset(self.head))
        if not self.tail or not self.head:
            raise EmptyTailOrHead("tail and head must both be nonempty")
        if self.tail & self.head:
            raise EmptyTailOrHead(
                f"tail and head overlap on {sorted(self.tail & self.head)}"
            )

    @property
    def vertices(self) -> frozenset[int]:
        return self.tail | self.head

    @property
    def size(self) -> int:
        return len(self.tail) + len(self.head)

    def __repr__(self):
        return f"DirectedEdge(tail={sorted(self.tail)}, head={sorted(self.head)})"


@dataclass(frozen=True)
class DirectedHypergraph:
    """n vertices plus an ordered sequence of directed hyperedges.

    The constructor checks per-edge structure and vertex ranges; use
    :func:`validate` to also enforce pairwise-distinct vertex sets.
    """

    n: int
    edges: tuple[DirectedEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.n < 1:
            raise VertexOutOfRange(f"vertex count must be >= 1, got {self.n}")
        for pos, edge in enumerate(self.edges):
            bad = [v for v in edge.vertices if not (1 <= v <= self.n)]
            if bad:
                raise VertexOutOfRange(
                    f"edge {pos} references vertices {sorted(bad)} outside [1, {self.n}]"
                )

    def __len__(self):
        return len(self.edges)


class RankCorank(NamedTuple):
    rank: int
    corank: int
    uniform: bool


@dataclass(frozen=True)
class DegreeProfile:
    """Out/in degree vectors with their extremes and the sorted out sequence."""

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    max_out: int
    min_out: int
    max_in: int
    min_in: int
    sorted_out: tuple[int, ...] = field(repr=False)


@dataclass(frozen=True)
class UndirectedHypergraph:
    n: int
    edges: tuple[frozenset[int], ...]


def validate(
    n: int,
    edges: Iterable[tuple[Iterable[int], Iterable[int]] | DirectedEdge],
    require_distinct_unions: bool = True,
) -> DirectedHypergraph:
    """Build a checked hypergraph from (tail, head) pairs.

    Raises EmptyTailOrHead, VertexOutOfRange, or DuplicateVertexSet (the
    latter only when ``require_distinct_unions`` is left on).
    """
    built = []
    for item in edges:
        if isinstance(item, DirectedEdge):
            built.append(item)
        else:
            tail, head = item
            built.append(DirectedEdge(frozenset(tail), frozenset(head)))
    if require_distinct_unions:
        seen: dict[frozenset[int], int] = {}
        for pos, edge in enumerate(built):
            if edge.vertices in seen:
                raise DuplicateVertexSet(
                    f"edges {seen[edge.vertices]} and {pos} both cover "
                    f"{sorted(edge.vertices)}"
                )
            seen[edge.vertices] = pos
    return DirectedHypergraph(n, tuple(built))


def degree_profile(hg: DirectedHypergraph) -> DegreeProfile:
    """Count tail and head memberships per vertex."""
    out = [0] * hg.n
    inn = [0] * hg.n
    for edge in hg.edges:
        for v in edge.tail:
            out[v - 1] += 1
        for v in edge.head:
            inn[v - 1] += 1
    return DegreeProfile(
        out_degrees=tuple(out),
        in_degrees=tuple(inn),
        max_out=max(out),
        min_out=min(out),
        max_in=max(inn),
        min_in=min(inn),
        sorted_out=tuple(sorted(out)),
    )


def rank_corank(hg: DirectedHypergraph) -> RankCorank:
    """Maximum and minimum edge cardinality; uniform iff they agree."""
    if not hg.edges:
        raise NoEdges("rank and corank need at least one edge")
    sizes = [edge.size for edge in hg.edges]
    return RankCorank(max(sizes), min(sizes), max(sizes) == min(sizes))


def underlying_undirected(hg: DirectedHypergraph) -> UndirectedHypergraph:
    """Forget directions, keeping each edge's vertex set.

    Edge count is preserved; two directed edges covering the same vertex
    set would collapse, so that input is rejected.
    """
    seen: dict[frozenset[int], int] = {}
    for pos, edge in enumerate(hg.edges):
        if edge.vertices in seen:
            raise UndirectedCollision(
                f"edges {seen[edge.vertices]} and {pos} both cover "
                f"{sorted(edge.vertices)}"
            )
        seen[edge.vertices] = pos
    return UndirectedHypergraph(hg.n, tuple(edge.vertices for edge in hg.edges))


def vertex_digraph(hg: DirectedHypergraph) -> dict[int, set[int]]:
    """Arc u -> w for every edge with u in its tail and w in its head.

    A directed walk crosses one edge per step, entering at a tail vertex
    and leaving at a head vertex, so walk reachability in the hypergraph
    equals reachability in this digraph.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(1, hg.n + 1)}
    for edge in hg.edges:
        for u in edge.tail:
            adj[u].update(edge.head)
    return adj


def is_strongly_connected(
    hg: DirectedHypergraph,
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether every ordered vertex pair is joined by a directed walk.

    Returns ``(True, None)`` or ``(False, (u, v))`` where v is the lowest
    unreachable target and u the lowest source failing to reach it.
    """
    adj = vertex_digraph(hg)
    if is_strongly_connected_digraph(hg.n, adj):
        return True, None
    reach = {u: reachable_from(adj, u) for u in range(1, hg.n + 1)}
    for v in range(1, hg.n + 1):
        for u in range(1, hg.n + 1):
            if u != v and v not in reach[u]:
                return False, (u, v)
    return True, None  # pragma: no cover - contradicts the SCC count


def is_out_regular(hg: DirectedHypergraph) -> Optional[int]:
    """The common out-degree k, or None when out-degrees differ."""
    profile = degree_profile(hg)
    if profile.min_out == profile.max_out:
        return profile.min_out
    return None


# ---------------------------------------------------------------------------
# .dhg text format


def parse_dhg(text: str, require_distinct_unions: bool = True) -> DirectedHypergraph:
    """Parse the line-oriented hypergraph format.

    Line 1 is ``vertices: <n>``; every further nonempty, non-comment line is
    ``edge: tail <id>+ ; head <id>+``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("vertices:"):
                raise ParseError("expected 'vertices: <n>' first", lineno)
            try:
                n = int(line[len("vertices:"):].strip())
            except ValueError:
                raise ParseError("vertex count is not an integer", lineno) from None
            continue
        if not line.startswith("edge:"):
            raise ParseError(f"unrecognized line {line!r}", lineno)
        body = line[len("edge:"):].strip()
        if ";" not in body:
            raise ParseError("edge line needs ';' between tail and head", lineno)
        tail_part, head_part = body.split(";", 1)
        tail_tokens = tail_part.split()
        head_tokens = head_part.split()
        if not tail_tokens or tail_tokens[0] != "tail":
            raise ParseError("edge line must start with 'tail'", lineno)
        if not head_tokens or head_tokens[0] != "head":
            raise ParseError("head block must start with 'head'", lineno)
        try:
            tail = [int(tok) for tok in tail_tokens[1:]]
            head = [int(tok) for tok in head_tokens[1:]]
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if not tail or not head:
            raise ParseError("tail and head must both list vertices", lineno)
        edges.append((tail, head))
    if n is None:
        raise ParseError("missing 'vertices: <n>' header")
    return validate(n, edges, require_distinct_unions=require_distinct_unions)


def format_dhg(hg: DirectedHypergraph) -> str:
    """Canonical serialization: sorted ids inside each block, input edge order."""
    lines = [f"vertices: {hg.n}"]
    for edge in hg.edges:
        tail = " ".join(str(v) for v in sorted(edge.tail))
        head = " ".join(str(v) for v in sorted(edge.head))
        lines.append(f"edge: tail {tail} ; head {head}")
    return "\n".join(lines) + "\n"


def fingerprint(hg: DirectedHypergraph) -> str:
    """SHA-256 of the canonical serialization; binds reports to inputs."""
    return hashlib.sha256(format_dhg(hg).encode()).hexdigest()
