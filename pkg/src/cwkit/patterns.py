"""Pattern containment and class-recognition predicates.

The central operation is induced-subgraph search (backtracking over pattern
vertices in descending-degree order with adjacency-consistency pruning); on
top of it sit the freeness test, the recognisers consumed by the rule tables
(class S membership, shape flags, planarity) and the induced cycle/path
probes.  The exponential probes carry a configurable vertex cap and raise
``CapacityError`` rather than ever returning a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import CapacityError, InputError
from .graphs import Graph, complement

__all__ = [
    "Embedding",
    "contains_induced",
    "is_free",
    "in_class_S",
    "ShapeReport",
    "shape_tests",
    "is_planar",
    "has_triangle",
    "has_induced_cycle_at_least",
    "longest_induced_path",
    "CyclePathReport",
    "cycle_and_path_probes",
]

PROBE_CAP = 16
PLANARITY_SEARCH_CAP = 10


@dataclass(frozen=True)
class Embedding:
    """An injective map pattern-vertex -> host-vertex with induced semantics."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != pattern.n:
            return False
        for u in range(pattern.n):
            for v in range(u + 1, pattern.n):
                if pattern.has_edge(u, v) != host.has_edge(m[u], m[v]):
                    return False
        return True


def _embed(host: Graph, pattern: Graph, order: list[int], forced: dict[int, int]) -> Optional[list[int]]:
    """Backtracking induced embedding along ``order``; forced entries pinned."""
    if pattern.n > host.n:
        return None
    if len(set(forced.values())) != len(forced):
        return None
    pinned = sorted(forced.items())
    for a, (p, w) in enumerate(pinned):
        for q, x in pinned[a + 1 :]:
            if pattern.has_edge(p, q) != host.has_edge(w, x):
                return None
    image: dict[int, int] = dict(forced)
    used = set(forced.values())

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        if p in image:
            return rec(i + 1)
        pa = pattern.adj[p]
        for w in range(host.n):
            if w in used:
                continue
            ha = host.adj[w]
            ok = True
            for q, x in image.items():
                if (pa >> q & 1) != (ha >> x & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[p] = w
            used.add(w)
            if rec(i + 1):
                return True
            used.remove(w)
            del image[p]
        return False

    if not rec(0):
        return None
    return [image[p] for p in range(pattern.n)]


def contains_induced(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """An induced embedding of pattern into host, or None.

    On success the returned mapping is the lexicographically least one,
    obtained by pinning pattern vertices 0, 1, ... to their smallest feasible
    images in turn.
    """
    if pattern.n == 0:
        return Embedding(())
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    found = _embed(host, pattern, order, {})
    if found is None:
        return None
    # Lexicographic minimisation, one pattern vertex at a time.
    forced: dict[int, int] = {}
    for p in range(pattern.n):
        for w in range(host.n):
            if w in forced.values():
                continue
            trial = dict(forced)
            trial[p] = w
            attempt = _embed(host, pattern, order, trial)
            if attempt is not None:
                forced[p] = w
                found = attempt
                break
    return Embedding(tuple(found))


def is_free(g: Graph, patterns: list[Graph]) -> tuple[bool, Optional[tuple[int, Embedding]]]:
    """True iff no listed pattern embeds induced; else (False, (index, where))."""
    for i, pat in enumerate(patterns):
        emb = contains_induced(g, pat)
        if emb is not None:
            return False, (i, emb)
    return True, None


# -- class S and shape recognisers --------------------------------------


def _component_is_path(g: Graph, comp: list[int]) -> bool:
    degs = sorted(g.degree(v) for v in comp)
    if len(comp) == 1:
        return True
    edges_inside = sum(degs) // 2
    return edges_inside == len(comp) - 1 and degs[-1] <= 2


def _component_is_subdivided_claw(g: Graph, comp: list[int]) -> bool:
    degs = sorted(g.degree(v) for v in comp)
    edges_inside = sum(degs) // 2
    if edges_inside != len(comp) - 1:  # not a tree
        return False
    return degs.count(1) == 3 and degs[-1] == 3 and degs[-2] <= 2


def in_class_S(g: Graph) -> bool:
    """Every component is a path or a subdivided claw (one degree-3 centre)."""
    return all(
        _component_is_path(g, comp) or _component_is_subdivided_claw(g, comp)
        for comp in g.components()
    )


@dataclass(frozen=True)
class ShapeReport:
    is_edgeless: bool
    edgeless_size: Optional[int]
    is_complete: bool
    complete_size: Optional[int]
    is_linear_forest: bool
    is_forest: bool
    is_complete_multipartite: bool


def shape_tests(g: Graph) -> ShapeReport:
    edgeless = not g.edges
    full = g.n * (g.n - 1) // 2
    comp = len(g.edges) == full and g.n >= 1
    forest = len(g.edges) == g.n - len(g.component_masks())
    linear = forest and g.max_degree() <= 2
    # Complete multipartite iff the complement is a disjoint union of cliques.
    co = complement(g)
    cm = g.n >= 1 and all(
        len(c) * (len(c) - 1) // 2 == sum(co.degree(v) for v in c) // 2
        for c in co.components()
    )
    return ShapeReport(
        is_edgeless=edgeless,
        edgeless_size=g.n if edgeless else None,
        is_complete=comp,
        complete_size=g.n if comp else None,
        is_linear_forest=linear,
        is_forest=forest,
        is_complete_multipartite=cm,
    )


# -- planarity -----------------------------------------------------------


def _disjoint_paths(g: Graph, pairs: list[tuple[int, int]], branch: frozenset[int]) -> bool:
    """Internally-disjoint paths for all pairs, avoiding branch vertices inside."""

    def rec(i: int, used: int) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]

        def paths(v: int, blocked: int) -> bool:
            if g.has_edge(v, b) and rec(i + 1, blocked):
                return True
            for w in g.neighbors(v):
                if w == b or w in branch or blocked >> w & 1:
                    continue
                if paths(w, blocked | 1 << w):
                    return True
            return False

        return paths(a, used)

    return rec(0, 0)


def _has_subdivision(g: Graph, model: str) -> bool:
    """Search for a K5 or K3,3 subdivision with explicit branch vertices."""
    if model == "K5":
        cands = [v for v in range(g.n) if g.degree(v) >= 4]
        for bs in combinations(cands, 5):
            pairs = [(a, b) for a, b in combinations(bs, 2)]
            if _disjoint_paths(g, pairs, frozenset(bs)):
                return True
        return False
    cands = [v for v in range(g.n) if g.degree(v) >= 3]
    for left in combinations(cands, 3):
        rest = [v for v in cands if v not in left]
        for right in combinations(rest, 3):
            if left > tuple(sorted(right)):
                continue  # (L,R) vs (R,L) symmetry
            pairs = [(a, b) for a in left for b in right]
            if _disjoint_paths(g, pairs, frozenset(left) | frozenset(right)):
                return True
    return False


def is_planar(g: Graph) -> bool:
    """Exact planarity.

    Small inputs run an Euler-bound prefilter followed by an exhaustive
    K5/K3,3-subdivision search; larger inputs are handed to networkx's
    left-right planarity test.
    """
    n, m = g.n, len(g.edges)
    if n >= 3 and m > 3 * n - 6:
        return False
    if n <= 4:
        return True
    if n <= PLANARITY_SEARCH_CAP:
        return not (_has_subdivision(g, "K5") or _has_subdivision(g, "K33"))
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(G)
    return ok


# -- induced cycle and path probes ---------------------------------------


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges)


def _probe_guard(g: Graph, cap: Optional[int]) -> None:
    limit = PROBE_CAP if cap is None else cap
    if g.n > limit:
        raise CapacityError(
            f"induced cycle/path probe capped at {limit} vertices, got {g.n}; raise max_vertices to override"
        )


def has_induced_cycle_at_least(g: Graph, length: int, max_vertices: Optional[int] = None) -> bool:
    """True iff some chordless cycle has at least ``length`` vertices."""
    if length < 3:
        raise InputError("cycle length threshold must be at least 3")
    _probe_guard(g, max_vertices)

    # Grow induced paths from a least start vertex; close into a cycle when
    # long enough.  The path is chordless by construction, so a closing edge
    # with no other adjacencies to the interior gives an induced cycle.
    def rec(path: list[int], path_set: int) -> bool:
        v = path[-1]
        if len(path) >= length and g.has_edge(path[0], v):
            return True
        for w in g.neighbors(v):
            if w <= path[0] or path_set >> w & 1:
                continue
            # w may touch only the last vertex (and possibly path[0] to close)
            bad = g.adj[w] & path_set & ~(1 << v)
            if bad & ~(1 << path[0]):
                continue
            if bad and len(path) + 1 < length:
                continue  # would close a too-short cycle; adjacency to start forbidden
            if rec(path + [w], path_set | 1 << w):
                return True
        return False

    for s in range(g.n):
        if rec([s], 1 << s):
            return True
    return False


def longest_induced_path(g: Graph, max_vertices: Optional[int] = None) -> int:
    """The largest r such that the r-vertex path embeds induced (0 if empty)."""
    _probe_guard(g, max_vertices)
    best = 1 if g.n else 0

    def rec(path_set: int, v: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        for w in g.neighbors(v):
            if path_set >> w & 1:
                continue
            if g.adj[w] & path_set & ~(1 << v):
                continue
            rec(path_set | 1 << w, w, length + 1)

    for s in range(g.n):
        rec(1 << s, s, 1)
    return best


@dataclass(frozen=True)
class CyclePathReport:
    has_triangle: bool
    has_induced_cycle_at_least: bool
    longest_induced_path_length: int


def cycle_and_path_probes(g: Graph, min_cycle: int = 4, max_vertices: Optional[int] = None) -> CyclePathReport:
    return CyclePathReport(
        has_triangle=has_triangle(g),
        has_induced_cycle_at_least=has_induced_cycle_at_least(g, min_cycle, max_vertices),
        longest_induced_path_length=longest_induced_path(g, max_vertices),
    )
