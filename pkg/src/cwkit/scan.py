"""Exhaustive classification scan over all small forbidden pairs.

Enumerates the non-isomorphic graphs up to a vertex budget, precomputes each
graph's rule-side bits once, and then classifies every unordered pair through
the same rule tables the one-off classifier uses.  The scan doubles as the
consistency harness: it reports any pair on which a bounded rule and an
unbounded rule both fire, and any pair that neither matches a rule nor is
equivalent to a listed open case.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .classifier import OPEN_CASES, PAIR_RULES, Status, cw_facts, display_name
from .enumeration import nonisomorphic_graphs_upto
from .graphs import Graph, complement
from .isomorphism import canonical_key
from .names import graph_named

__all__ = ["ScanResult", "scan_pairs"]


@dataclass
class ScanResult:
    max_vertices: int
    pair_count: int
    counts: dict[str, int]
    open_pairs: list[tuple[str, str, str]]  # (name1, name2, case id)
    conflicts: list[str] = field(default_factory=list)

    def report(self) -> str:
        lines = [
            f"scanned unordered pairs over graphs with <= {self.max_vertices} vertices: {self.pair_count}"
        ]
        for status in (Status.BOUNDED, Status.UNBOUNDED, Status.OPEN):
            lines.append(f"  {status.value}: {self.counts.get(status.value, 0)}")
        lines.append(f"  open pairs ({len(self.open_pairs)}):")
        for n1, n2, case in self.open_pairs:
            lines.append(f"    ({n1}, {n2})  case {case}")
        for c in self.conflicts:
            lines.append(f"  CONFLICT: {c}")
        return "\n".join(lines)


def _closure(pair: tuple[int, int], co: list[int], k3: int, paw: int) -> frozenset[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    queue = [pair]
    swap_ok = k3 >= 0 and paw >= 0  # both ends of the swap must be in catalog
    while queue:
        p = queue.pop()
        key = (min(p), max(p))
        if key in seen:
            continue
        seen.add(key)
        a, b = key
        queue.append((co[a], co[b]))
        if swap_ok:
            for x, y in ((a, b), (b, a)):
                if x == k3:
                    queue.append((paw, y))
                elif x == paw:
                    queue.append((k3, y))
    return frozenset(seen)


def scan_pairs(max_vertices: int = 7, jobs: int = 1) -> ScanResult:
    """Classify every unordered pair of non-isomorphic graphs, exhaustively."""
    graphs = nonisomorphic_graphs_upto(max_vertices)
    ids = {canonical_key(g): i for i, g in enumerate(graphs)}
    co = [ids[canonical_key(complement(g))] for g in graphs]
    k3 = ids.get(canonical_key(graph_named("K3")), -1)
    paw = ids.get(canonical_key(graph_named("paw")), -1)

    facts = [cw_facts(g) for g in graphs]
    n_rules = len(PAIR_RULES)
    left = [0] * len(graphs)
    right = [0] * len(graphs)
    for i in range(len(graphs)):
        f, fc = facts[i], facts[co[i]]
        lbits = rbits = 0
        for r, rule in enumerate(PAIR_RULES):
            if rule.left(f, fc):
                lbits |= 1 << r
            if rule.right(f, fc):
                rbits |= 1 << r
        left[i] = lbits
        right[i] = rbits
    b_mask = sum(1 << r for r, rule in enumerate(PAIR_RULES) if rule.status is Status.BOUNDED)
    u_mask = sum(1 << r for r, rule in enumerate(PAIR_RULES) if rule.status is Status.UNBOUNDED)

    open_keys: dict[tuple[int, int], str] = {}
    for case_id, n1, n2 in OPEN_CASES:
        g1, g2 = graph_named(n1), graph_named(n2)
        if g1.n <= max_vertices and g2.n <= max_vertices:
            a, b = ids[canonical_key(g1)], ids[canonical_key(g2)]
            open_keys[(min(a, b), max(a, b))] = case_id

    def run_chunk(rows: range):
        counts = {s.value: 0 for s in (Status.BOUNDED, Status.UNBOUNDED, Status.OPEN)}
        opens: list[tuple[int, int, str]] = []
        conflicts: list[str] = []
        for i in rows:
            for j in range(i, len(graphs)):
                fired = 0
                for a, b in _closure((i, j), co, k3, paw):
                    fired |= (left[a] & right[b]) | (left[b] & right[a])
                    if fired & b_mask and fired & u_mask:
                        break
                hit_b = bool(fired & b_mask)
                hit_u = bool(fired & u_mask)
                if hit_b and hit_u:
                    conflicts.append(
                        f"bounded and unbounded rules both fire on "
                        f"({display_name(graphs[i])}, {display_name(graphs[j])})"
                    )
                    continue
                if hit_b:
                    counts[Status.BOUNDED.value] += 1
                elif hit_u:
                    counts[Status.UNBOUNDED.value] += 1
                else:
                    case = None
                    for key in _closure((i, j), co, k3, paw):
                        case = open_keys.get(key)
                        if case:
                            break
                    if case is None:
                        conflicts.append(
                            f"no rule and no open case matches "
                            f"({display_name(graphs[i])}, {display_name(graphs[j])})"
                        )
                    else:
                        counts[Status.OPEN.value] += 1
                        opens.append((i, j, case))
        return counts, opens, conflicts

    chunks = [range(i, len(graphs), max(1, jobs)) for i in range(max(1, jobs))]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_chunk, chunks))
    else:
        results = [run_chunk(c) for c in chunks]

    counts = {s.value: 0 for s in (Status.BOUNDED, Status.UNBOUNDED, Status.OPEN)}
    open_pairs: list[tuple[str, str, str]] = []
    conflicts: list[str] = []
    opens_idx: list[tuple[int, int, str]] = []
    for c, o, x in results:
        for k, v in c.items():
            counts[k] += v
        opens_idx.extend(o)
        conflicts.extend(x)
    opens_idx.sort()
    for i, j, case in opens_idx:
        open_pairs.append((display_name(graphs[i]), display_name(graphs[j]), case))
    conflicts.sort()
    total = len(graphs) * (len(graphs) + 1) // 2
    return ScanResult(max_vertices, total, counts, open_pairs, conflicts)
