"""Shared helpers: tiny independent oracles and catalog shortcuts.

The oracles here are deliberately naive (exhaustive enumeration over
injective maps or vertex subsets) so the fast implementations can be checked
against something that is obviously correct.
"""

from itertools import permutations

import pytest

from cwkit.graphs import Graph
from cwkit.names import graph_named


@pytest.fixture(scope="session")
def named():
    return graph_named


def naive_contains_induced(host: Graph, pattern: Graph):
    """First (lexicographically least) induced embedding by brute force."""
    if pattern.n > host.n:
        return None
    for image in permutations(range(host.n), pattern.n):
        ok = True
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(image[u], image[v]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return image
    return None


def naive_longest_induced_path(g: Graph) -> int:
    from cwkit.names import graph_named as gn

    best = 0
    for r in range(g.n, 0, -1):
        if naive_contains_induced(g, gn(f"P{r}")) is not None:
            return r
    return best


def naive_has_induced_cycle_at_least(g: Graph, length: int) -> bool:
    from cwkit.names import graph_named as gn

    for r in range(length, g.n + 1):
        if naive_contains_induced(g, gn(f"C{r}")) is not None:
            return True
    return False
