"""Small digraph helpers: SCC decomposition and reachability.

Vertices are 1-based ints in [1, n]; an adjacency map sends each vertex to a
set of successors.
"""

from __future__ import annotations


def strongly_connected_components(n: int, adj: dict[int, set[int]]) -> list[set[int]]:
    """Tarjan's algorithm, iterative to dodge recursion limits."""
    index = {}
    lowlink = {}
    on_stack = set()
    stack: list[int] = []
    components: list[set[int]] = []
    counter = 0

    for root in range(1, n + 1):
        if root in index:
            continue
        work = [(root, iter(sorted(adj.get(root, ()))))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, successors = work[-1]
            advanced = False
            for w in successors:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(adj.get(w, ())))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                components.append(component)
    return components


def is_strongly_connected_digraph(n: int, adj: dict[int, set[int]]) -> bool:
    if n <= 1:
        return True
    return len(strongly_connected_components(n, adj)) == 1


def reachable_from(adj: dict[int, set[int]], start: int) -> set[int]:
    """Vertices reachable from ``start`` (including itself) by directed walks."""
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen
