"""Build the connectivity tensors of a directed hypergraph.

Every tensor has order m = rank(H) (the maximum edge cardinality) and
dimension n.  An edge with tail size k and total size s contributes
nonzero entries at index tuples made of a leading block drawn from the
tail and a trailing block drawn from the head (the roles swap for the
in-adjacency), each block covering its vertex set at least once.  The
entry value k/alpha (out) or (s-k)/alpha (in) uses the composition-count
normalizer alpha, which equals the number of such tuples; this makes each
edge contribute exactly 1 to every one of its tail (resp. head) rows, so
row sums reproduce out (resp. in) degrees.

For uniform hypergraphs (s = m for every edge) the blocks have no slack:
the out entries sit on distinct-index tuples with value
1/((m-k)!(k-1)!) and the in entries with value 1/((m-k-1)!k!).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator, Literal

from .errors import BadArity, NotUniform
from .hypergraph import (
    DirectedEdge,
    DirectedHypergraph,
    UndirectedHypergraph,
    degree_profile,
    fingerprint,
    rank_corank,
    underlying_undirected,
)
from .hypermatrix import Hypermatrix, IndexTuple

Direction = Literal["out", "in"]

TENSOR_KINDS = (
    "out-adj",
    "in-adj",
    "out-deg",
    "in-deg",
    "out-lap",
    "in-lap",
    "out-slap",
    "in-slap",
    "adj",
    "lap",
    "slap",
    "b",
    "und-adj",
)


@dataclass(frozen=True)
class EdgeNormalizer:
    """Composition-count denominator for one (rank, edge size, tail size)."""

    m: int
    s: int
    k: int
    value: int


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _surjective_fill_count(slots: int, letters: int) -> int:
    """Number of length-``slots`` words using all of ``letters`` symbols,
    summed as multinomials over positive compositions."""
    if letters < 1 or slots < letters:
        return 0
    total = 0
    slots_fact = math.factorial(slots)
    for comp in _compositions(slots, letters):
        term = slots_fact
        for t in comp:
            term //= math.factorial(t)
        total += term
    return total


def edge_normalizer(m: int, s: int, k: int) -> EdgeNormalizer:
    """Tuple count for an edge of size s and tail size k inside rank m.

    Splits the m slots into a leading block of r+k tail slots and a
    trailing block of m-k-r head slots, r running over the slack 0..m-s.
    For s = m the value collapses to k!(m-k)!.
    """
    if not (1 <= k < s <= m):
        raise BadArity(f"need 1 <= k < s <= m, got k={k}, s={s}, m={m}")
    value = 0
    for r in range(m - s + 1):
        value += _surjective_fill_count(r + k, k) * _surjective_fill_count(
            m - k - r, s - k
        )
    return EdgeNormalizer(m=m, s=s, k=k, value=value)


def _covering_words(elements: tuple[int, ...], length: int) -> Iterator[IndexTuple]:
    """All length-``length`` words over ``elements`` using each at least once."""
    need = len(elements)
    if length < need:
        return
    for word in product(elements, repeat=length):
        if len(set(word)) == need:
            yield word


def edge_out_entries(edge: DirectedEdge, m: int) -> Iterator[tuple[IndexTuple, Fraction]]:
    """Nonzero out-adjacency entries contributed by one edge at rank m."""
    k = len(edge.tail)
    s = edge.size
    value = Fraction(k, edge_normalizer(m, s, k).value)
    tail = tuple(sorted(edge.tail))
    head = tuple(sorted(edge.head))
    for t in range(k, m - s + k + 1):
        for lead in _covering_words(tail, t):
            for trail in _covering_words(head, m - t):
                yield lead + trail, value


def edge_in_entries(edge: DirectedEdge, m: int) -> Iterator[tuple[IndexTuple, Fraction]]:
    """Nonzero in-adjacency entries contributed by one edge at rank m.

    Mirror image of the out case: head vertices fill the leading block,
    tail vertices the trailing one.
    """
    k = len(edge.tail)
    s = edge.size
    value = Fraction(s - k, edge_normalizer(m, s, k).value)
    tail = tuple(sorted(edge.tail))
    head = tuple(sorted(edge.head))
    for t in range(k, m - s + k + 1):
        for lead in _covering_words(head, m - t):
            for trail in _covering_words(tail, t):
                yield lead + trail, value


def _tensor_order(hg: DirectedHypergraph) -> int:
    # Edgeless hypergraphs have no rank; order 2 is the smallest legal order.
    if not hg.edges:
        return 2
    return rank_corank(hg).rank


def _accumulate(hg: DirectedHypergraph, entry_fn) -> Hypermatrix:
    m = _tensor_order(hg)
    acc: dict[IndexTuple, Fraction] = {}
    for edge in hg.edges:
        for key, value in entry_fn(edge, m):
            acc[key] = acc.get(key, Fraction(0)) + value
    return Hypermatrix(m, hg.n, acc)


def out_adjacency(hg: DirectedHypergraph) -> Hypermatrix:
    return _accumulate(hg, edge_out_entries)


def in_adjacency(hg: DirectedHypergraph) -> Hypermatrix:
    return _accumulate(hg, edge_in_entries)


def degree_tensor(hg: DirectedHypergraph, direction: Direction) -> Hypermatrix:
    m = _tensor_order(hg)
    profile = degree_profile(hg)
    degrees = profile.out_degrees if direction == "out" else profile.in_degrees
    entries = {
        (i,) * m: Fraction(degrees[i - 1])
        for i in range(1, hg.n + 1)
        if degrees[i - 1]
    }
    return Hypermatrix(m, hg.n, entries)


def laplacian(hg: DirectedHypergraph, direction: Direction) -> Hypermatrix:
    adjacency = out_adjacency(hg) if direction == "out" else in_adjacency(hg)
    return degree_tensor(hg, direction) - adjacency


def signless_laplacian(hg: DirectedHypergraph, direction: Direction) -> Hypermatrix:
    adjacency = out_adjacency(hg) if direction == "out" else in_adjacency(hg)
    return degree_tensor(hg, direction) + adjacency


def total_adjacency(hg: DirectedHypergraph) -> Hypermatrix:
    return out_adjacency(hg) + in_adjacency(hg)


def total_laplacian(hg: DirectedHypergraph) -> Hypermatrix:
    return laplacian(hg, "out") + laplacian(hg, "in")


def total_signless(hg: DirectedHypergraph) -> Hypermatrix:
    return signless_laplacian(hg, "out") + signless_laplacian(hg, "in")


def direct_symmetrized_adjacency(hg: DirectedHypergraph) -> Hypermatrix:
    """Closed form of the symmetrized out-adjacency for uniform hypergraphs:
    tail size over m! on every arrangement of each edge's vertex set."""
    if not hg.edges:
        return Hypermatrix(2, hg.n)
    info = rank_corank(hg)
    if not info.uniform:
        raise NotUniform("the symmetric closed form needs a uniform hypergraph")
    m = info.rank
    value_den = math.factorial(m)
    acc: dict[IndexTuple, Fraction] = {}
    for edge in hg.edges:
        value = Fraction(len(edge.tail), value_den)
        for key in permutations(sorted(edge.vertices)):
            acc[key] = acc.get(key, Fraction(0)) + value
    return Hypermatrix(m, hg.n, acc)


def undirected_adjacency(hd: UndirectedHypergraph, m: int) -> Hypermatrix:
    """Standard adjacency tensor of an m-uniform undirected hypergraph:
    1/(m-1)! on every arrangement of each edge, so row contraction yields
    the per-edge product of the other m-1 vertices."""
    if any(len(edge) != m for edge in hd.edges):
        raise NotUniform(f"every undirected edge must have exactly {m} vertices")
    value = Fraction(1, math.factorial(m - 1))
    acc: dict[IndexTuple, Fraction] = {}
    for edge in hd.edges:
        for key in permutations(sorted(edge)):
            acc[key] = acc.get(key, Fraction(0)) + value
    return Hypermatrix(m, hd.n, acc)


def in_degree_identity_check(hg: DirectedHypergraph) -> bool:
    """Exact per-vertex identity between in-degrees and weighted out entries.

    For uniform hypergraphs the in-degree of v equals the sum, over edges
    whose head contains v, of (m - k)/k times the edge's out entries whose
    last index is v.
    """
    if not hg.edges:
        return True
    info = rank_corank(hg)
    if not info.uniform:
        raise NotUniform("the weighted in-degree identity is stated for uniform input")
    m = info.rank
    profile = degree_profile(hg)
    weighted = [Fraction(0)] * hg.n
    for edge in hg.edges:
        k = len(edge.tail)
        weight = Fraction(m - k, k)
        for key, value in edge_out_entries(edge, m):
            if key[-1] in edge.head:
                weighted[key[-1] - 1] += weight * value
    return all(
        weighted[i] == profile.in_degrees[i] for i in range(hg.n)
    )


@dataclass(frozen=True)
class BuiltTensor:
    """A constructed tensor plus its kind tag and source fingerprint."""

    tensor: Hypermatrix
    kind: str
    source: str


def build(hg: DirectedHypergraph, kind: str) -> BuiltTensor:
    """Dispatch on the tensor kind tags used by the command line."""
    if kind not in TENSOR_KINDS:
        raise ValueError(f"unknown tensor kind {kind!r}; choose from {TENSOR_KINDS}")
    if kind == "out-adj":
        tensor = out_adjacency(hg)
    elif kind == "in-adj":
        tensor = in_adjacency(hg)
    elif kind == "out-deg":
        tensor = degree_tensor(hg, "out")
    elif kind == "in-deg":
        tensor = degree_tensor(hg, "in")
    elif kind == "out-lap":
        tensor = laplacian(hg, "out")
    elif kind == "in-lap":
        tensor = laplacian(hg, "in")
    elif kind == "out-slap":
        tensor = signless_laplacian(hg, "out")
    elif kind == "in-slap":
        tensor = signless_laplacian(hg, "in")
    elif kind == "adj":
        tensor = total_adjacency(hg)
    elif kind == "lap":
        tensor = total_laplacian(hg)
    elif kind == "slap":
        tensor = total_signless(hg)
    elif kind == "b":
        tensor = direct_symmetrized_adjacency(hg)
    else:
        hd = underlying_undirected(hg)
        tensor = undirected_adjacency(hd, rank_corank(hg).rank)
    return BuiltTensor(tensor=tensor, kind=kind, source=fingerprint(hg))
