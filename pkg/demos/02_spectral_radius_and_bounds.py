"""Spectral radius estimation and the degree-based brackets.

Runs the ratio-bracket power iteration on out-adjacency tensors, compares
the estimate against the row-sum and refined degree bounds, and checks a
diagonal similarity transport of an exact eigenpair.
"""

from fractions import Fraction

from dhspec import (
    degree_profile,
    diagonal_similarity,
    nqz_spectral_radius,
    out_adjacency,
    refined_degree_bounds,
    row_sum_bounds,
    validate,
    verify_h_eigenpair,
)

# A 1-out-regular 3-uniform cycle on five vertices: every vertex tails one
# edge covering the next two, so the radius is pinned at 1.
edges = [({v}, {v % 5 + 1, (v + 1) % 5 + 1}) for v in range(1, 6)]
cycle = validate(5, edges)
adjacency = out_adjacency(cycle)

bounds = row_sum_bounds(adjacency)
print(f"row-sum bounds: [{bounds.lower}, {bounds.upper}]")
refined = refined_degree_bounds(cycle)
print(f"refined bounds: [{refined.lower:.6f}, {refined.upper:.6f}]")

result = nqz_spectral_radius(adjacency)
print(f"power-iteration estimate: {result.value:.12f} "
      f"after {result.diagnostics['iterations']} iterations")
print(f"final bracket: {result.diagnostics['bracket']}")

# The all-ones vector is an exact eigenpair for out-regular hypergraphs.
cert = verify_h_eigenpair(adjacency, Fraction(1), [1] * cycle.n)
print(f"(1, all-ones) exact: {cert.exact}")

# Conjugating by a positive diagonal moves the eigenvector, not the value.
diag = [Fraction(2), Fraction(3), Fraction(1), Fraction(5), Fraction(2)]
similar = diagonal_similarity(adjacency, diag)
transported = [Fraction(1) / d for d in diag]
cert2 = verify_h_eigenpair(similar, Fraction(1), transported)
print(f"transported pair exact under diagonal similarity: {cert2.exact}")

# A hypergraph with uneven degrees: the estimate lands inside both brackets.
uneven = validate(5, [({1, 2}, {3}), ({1, 4}, {2, 5}), ({1}, {4, 5}), ({2, 4}, {1, 3})])
profile = degree_profile(uneven)
print(f"\nuneven out degrees: {profile.out_degrees}")
a2 = out_adjacency(uneven)
r2 = nqz_spectral_radius(a2)
b2 = row_sum_bounds(a2)
print(f"estimate {r2.value:.9f} inside [{b2.lower}, {b2.upper}]")
