"""Connectivity of directed hypergraphs and irreducibility of their tensors.

Weak irreducibility of the adjacency tensor does not capture strong
connectivity: the four-vertex example below is weakly irreducible while a
whole vertex pair stays unreachable.  The sharper first-to-last-index
digraph does capture it, exactly.
"""

from dhspec import (
    is_strongly_connected,
    is_weak_star_irreducible,
    is_weakly_irreducible,
    out_adjacency,
    reducibility_report,
    validate,
    weak_graph,
    weak_star_graph,
)

hg = validate(4, [({1, 3}, {2}), ({4, 2}, {3})])
print("edges: {1,3}->{2} and {4,2}->{3}")

connected, witness = is_strongly_connected(hg)
print(f"strongly connected: {connected}, unreachable pair: {witness}")

adjacency = out_adjacency(hg)
print(f"nonzero entries: {sorted(adjacency.entries)}")

print(f"\nweak graph arcs:      { {i: sorted(v) for i, v in weak_graph(adjacency).items()} }")
print(f"first-to-last arcs:   { {i: sorted(v) for i, v in weak_star_graph(adjacency).items()} }")
report = reducibility_report(adjacency)
print(f"weakly irreducible:   {report.weakly_irreducible}")
print(f"weak* irreducible:    {report.weak_star_irreducible}")
print(f"reducibility witness: {report.reducible_witness and sorted(report.reducible_witness)}")

# The equivalence holds across random instances: strong connectivity of the
# hypergraph is exactly weak* irreducibility of its out-adjacency tensor.
print("\nchecking the equivalence on a strongly connected cycle family:")
cycle = validate(5, [({v}, {v % 5 + 1, (v + 1) % 5 + 1}) for v in range(1, 6)])
connected, _ = is_strongly_connected(cycle)
star = is_weak_star_irreducible(out_adjacency(cycle))
weak = is_weakly_irreducible(out_adjacency(cycle))
print(f"  strongly connected {connected} == weak* {star}; weak {weak}")
