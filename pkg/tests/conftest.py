"""Shared fixtures: random hypergraph generators and independent oracles.

The generators live here rather than in the package because hypergraph
generation is test plumbing, not library surface.  Oracles recompute
quantities by definition (dense enumeration, walk expansion,
inclusion-exclusion) so the sparse implementations are checked against an
independent route.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product

import pytest

from dhspec import DirectedHypergraph, DirectedEdge, Hypermatrix, validate


# ---------------------------------------------------------------------------
# generators


def random_hypergraph(
    rng: random.Random,
    n: int | None = None,
    n_range: tuple[int, int] = (3, 8),
    max_edges: int = 6,
    size_range: tuple[int, int] = (2, 5),
    uniform: bool | None = None,
) -> DirectedHypergraph:
    """Random valid hypergraph with pairwise-distinct edge vertex sets."""
    if n is None:
        n = rng.randint(*n_range)
    target = rng.randint(1, max_edges)
    fixed_size = None
    if uniform is None:
        uniform = rng.random() < 0.5
    if uniform:
        fixed_size = rng.randint(max(2, size_range[0]), min(n, size_range[1]))
    edges: list[DirectedEdge] = []
    unions: set[frozenset[int]] = set()
    attempts = 0
    while len(edges) < target and attempts < 200:
        attempts += 1
        size = fixed_size or rng.randint(max(2, size_range[0]), min(n, size_range[1]))
        vertices = frozenset(rng.sample(range(1, n + 1), size))
        if vertices in unions:
            continue
        tail_size = rng.randint(1, size - 1)
        tail = frozenset(rng.sample(sorted(vertices), tail_size))
        edges.append(DirectedEdge(tail, vertices - tail))
        unions.add(vertices)
    if not edges:
        vertices = frozenset(rng.sample(range(1, n + 1), 2))
        tail = frozenset([min(vertices)])
        edges.append(DirectedEdge(tail, vertices - tail))
    return DirectedHypergraph(n, tuple(edges))


def random_uniform_hypergraph(rng, n_range=(4, 7), m_range=(3, 4), max_edges=5):
    n = rng.randint(*n_range)
    m = rng.randint(*m_range)
    m = min(m, n)
    return random_hypergraph(
        rng, n=n, max_edges=max_edges, size_range=(m, m), uniform=True
    )


def random_strongly_connected_uniform(rng, n_range=(4, 6), m=3, max_edges=6):
    """Rejection-sample a strongly connected uniform hypergraph."""
    from dhspec import is_strongly_connected

    while True:
        hg = random_hypergraph(
            rng,
            n=rng.randint(*n_range),
            max_edges=max_edges,
            size_range=(m, m),
            uniform=True,
        )
        ok, _ = is_strongly_connected(hg)
        if ok:
            return hg


def out_regular_hypergraph(n: int, k: int = 1, m: int = 3) -> DirectedHypergraph:
    """Cycle-style k-out-regular m-uniform hypergraph on n vertices.

    Edge v covers the consecutive window {v, ..., v+m-1} (mod n) with its
    first k vertices as the tail, so every vertex sits in exactly k tails
    and the windows stay pairwise distinct for n > m.
    """
    assert n > m and 1 <= k < m
    edges = []
    for v in range(1, n + 1):
        window = [((v - 1 + j) % n) + 1 for j in range(m)]
        tail = frozenset(window[:k])
        edges.append(DirectedEdge(tail, frozenset(window) - tail))
    return validate(n, edges)


def common_vertex_hypergraph(rng, n=6, m=4, edges=3) -> DirectedHypergraph:
    """Uniform hypergraph whose edges all contain vertex 1."""
    built = []
    unions = set()
    while len(built) < edges:
        others = frozenset(rng.sample(range(2, n + 1), m - 1))
        vertices = others | {1}
        if vertices in unions:
            continue
        unions.add(vertices)
        tail_size = rng.randint(1, m - 1)
        tail = frozenset(rng.sample(sorted(vertices), tail_size))
        built.append(DirectedEdge(tail, vertices - tail))
    return validate(n, built)


def random_rational_vector(rng, n, num_range=(-4, 4), den_range=(1, 3)):
    return [
        Fraction(rng.randint(*num_range), rng.randint(*den_range)) for _ in range(n)
    ]


# ---------------------------------------------------------------------------
# oracles


def dense_apply(a: Hypermatrix, x):
    """Contraction by full index enumeration; exponential, tiny inputs only."""
    out = []
    for i in range(1, a.dim + 1):
        total = Fraction(0)
        for rest in product(range(1, a.dim + 1), repeat=a.order - 1):
            value = a[(i,) + rest]
            if value:
                term = value
                for j in rest:
                    term *= x[j - 1]
                total += term
        out.append(total)
    return out


def walk_reachability(hg: DirectedHypergraph):
    """Reachable sets by expanding directed walks step by step, running the
    full n*|E| steps without shortcuts."""
    steps = hg.n * max(len(hg.edges), 1)
    reach = {v: {v} for v in range(1, hg.n + 1)}
    for _ in range(steps):
        for v in range(1, hg.n + 1):
            grown = set(reach[v])
            for edge in hg.edges:
                if reach[v] & edge.tail:
                    grown |= edge.head
            reach[v] = grown
    return reach


def surjection_count_oracle(slots: int, letters: int) -> int:
    """Inclusion-exclusion count of onto words."""
    if letters < 1 or slots < letters:
        return 0
    return sum(
        (-1) ** j * math.comb(letters, j) * (letters - j) ** slots
        for j in range(letters + 1)
    )


@pytest.fixture
def rng():
    return random.Random(0x5EED)


@pytest.fixture
def worked_example():
    """The two-edge non-uniform hypergraph used as the golden fixture."""
    return validate(5, [({1, 2}, {3}), ({1, 4}, {2, 5})])


@pytest.fixture
def cycle_triple():
    """Cyclic 3-uniform family on three vertices; edge unions all coincide,
    so it is built with the distinct-union requirement relaxed."""
    return validate(
        3,
        [({1}, {2, 3}), ({2}, {1, 3}), ({3}, {1, 2})],
        require_distinct_unions=False,
    )


@pytest.fixture
def four_vertex_counterexample():
    """Weakly irreducible adjacency whose hypergraph is not strongly connected."""
    return validate(4, [({1, 3}, {2}), ({4, 2}, {3})])
