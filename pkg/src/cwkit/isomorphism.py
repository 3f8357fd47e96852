"""Isomorphism testing and canonical forms for small graphs.

Two engines share a colour-refinement core:

* ``canonical_key`` computes an exact canonical form by maximising the
  adjacency bitstring over refinement-class-respecting permutations, with
  prefix branch-and-bound.  Intended for small graphs (enumeration and
  catalog lookups); guarded by a vertex cap.
* ``find_isomorphism`` does plain backtracking with refinement-colour and
  adjacency-consistency pruning; fine for the few-dozen-vertex graphs the
  witness generators produce.
"""

from __future__ import annotations

from typing import Optional

from .errors import CapacityError
from .graphs import Graph

__all__ = ["canonical_key", "find_isomorphism", "is_isomorphic", "refine_colours"]

CANONICAL_CAP = 16


def refine_colours(adj: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Stable colour refinement; colours are isomorphism-invariant ints."""
    colours = [adj[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colours[u] for u in _bits(adj[v]))
            sigs.append((colours[v], tuple(nbr)))
        order = sorted(set(sigs))
        relabel = {s: i for i, s in enumerate(order)}
        new = [relabel[s] for s in sigs]
        if new == colours:
            return tuple(colours)
        colours = new


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def canonical_key(g: Graph) -> tuple:
    """A hashable value equal exactly for isomorphic graphs (small n only)."""
    return canonical_key_adj(g.adj, g.n)


def canonical_key_adj(adj: tuple[int, ...], n: int) -> tuple:
    if n > CANONICAL_CAP:
        raise CapacityError(f"canonical form supports at most {CANONICAL_CAP} vertices, got {n}")
    if n <= 1:
        return (n,)
    colours = refine_colours(adj, n)
    # Position blocks: vertices of equal colour are interchangeable; the
    # block order (by colour) is itself isomorphism-invariant.
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(colours[v], []).append(v)
    blocks = [by_colour[c] for c in sorted(by_colour)]
    slot_block: list[int] = []
    for bi, block in enumerate(blocks):
        slot_block += [bi] * len(block)

    # Twin classes: swapping two vertices with the same neighbourhood away
    # from each other is an automorphism, so within a search node one
    # representative per twin class is enough.  This collapses the factorial
    # blow-up on cliques, independent sets and similar blobs.
    twin_id = list(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if twin_id[v] == v and adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                twin_id[v] = twin_id[u]

    best: Optional[list[int]] = None

    perm: list[int] = []
    rows: list[int] = []
    used = [False] * n

    # DFS maximising the per-position adjacency rows lexicographically.
    # ``tight`` = current prefix equals the best prefix; only then may we
    # prune candidates whose row falls below the best row at this slot.
    # Best updates always happen inside the live subtree, so a tight flag
    # never goes stale.
    def rec(i: int, tight: bool) -> None:
        nonlocal best
        if i == n:
            if best is None or rows > best:
                best = rows[:]
            return
        scored = []
        seen_twins = set()
        for v in blocks[slot_block[i]]:
            if used[v]:
                continue
            if twin_id[v] in seen_twins:
                continue
            seen_twins.add(twin_id[v])
            row = 0
            av = adj[v]
            for p in perm:
                row = row << 1 | (av >> p & 1)
            scored.append((row, v))
        scored.sort(reverse=True)
        for row, v in scored:
            t = tight
            if best is not None and tight:
                if row < best[i]:
                    break  # sorted descending: the rest are smaller too
                if row > best[i]:
                    t = False
            perm.append(v)
            rows.append(row)
            used[v] = True
            rec(i + 1, t)
            used[v] = False
            rows.pop()
            perm.pop()

    rec(0, True)
    assert best is not None
    return (n, tuple(best))


def _invariants(g: Graph) -> tuple:
    return (g.n, len(g.edges), tuple(sorted(refine_colours(g.adj, g.n))))


def find_isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An adjacency-preserving bijection g -> h, or None."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    cg = refine_colours(g.adj, g.n)
    ch = refine_colours(h.adj, h.n)
    if sorted(cg) != sorted(ch):
        return None
    n = g.n
    if n == 0:
        return {}
    by_colour_h: dict[int, list[int]] = {}
    for v in range(n):
        by_colour_h.setdefault(ch[v], []).append(v)
    # Map the most-constrained g-vertices first: rare colour, high degree.
    order = sorted(range(n), key=lambda v: (len(by_colour_h[cg[v]]), -g.degree(v)))

    mapping: dict[int, int] = {}
    used_h = [False] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        au = g.adj[u]
        for w in by_colour_h.get(cg[u], ()):
            if used_h[w]:
                continue
            aw = h.adj[w]
            ok = True
            for x, y in mapping.items():
                if (au >> x & 1) != (aw >> y & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = w
            used_h[w] = True
            if rec(i + 1):
                return True
            used_h[w] = False
            del mapping[u]
        return False

    if rec(0):
        return dict(mapping)
    return None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff an adjacency-preserving bijection exists."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    if g.n <= CANONICAL_CAP:
        return canonical_key(g) == canonical_key(h)
    return find_isomorphism(g, h) is not None
