"""Decision procedures for forbidden-pattern graph classes.

Four classifiers share one pile of per-graph facts:

* ``classify_single``: one forbidden induced subgraph (a dichotomy).
* ``classify_pair``: two forbidden induced subgraphs.  The pair's equivalence
  class (closed under complementing both graphs and swapping K3 with the paw)
  is closed out first; the bounded and unbounded rule tables are then tested
  on every member in both orderings, and pairs matching neither table are
  looked up in the list of thirteen open cases.  The procedure is total.
* ``classify_relation``: forbidden subgraphs / minors / topological minors
  (three dichotomies on properties of the forbidden family alone).
* ``classify_colouring``: the colouring complexity table, which is not a
  dichotomy; Unknown is a legal outcome.

Every verdict carries the rule identifier, the pair member that matched, and
a citation anchor naming the mathematical source of the rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

from .errors import InputError, InvariantViolation
from .graphs import Graph, complement, induced_subgraph, to_graph6
from .isomorphism import is_isomorphic
from .names import format_name, graph_named, recognize
from .patterns import (
    contains_induced,
    has_induced_cycle_at_least,
    in_class_S,
    is_planar,
    shape_tests,
)

__all__ = [
    "Status",
    "Verdict",
    "equivalence_class",
    "classify_single",
    "classify_pair",
    "classify_relation",
    "classify_colouring",
    "OPEN_CASES",
    "COLOURING_OPEN_CASES",
    "display_name",
]


class Status(str, Enum):
    BOUNDED = "Bounded"
    UNBOUNDED = "Unbounded"
    OPEN = "Open"
    NP_COMPLETE = "NP-complete"
    POLYNOMIAL = "Polynomial"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule_id: str
    matched_pair: tuple[str, ...]
    citation: str

    def line(self) -> str:
        matched = ",".join(self.matched_pair)
        return f"status={self.status.value} rule={self.rule_id} matched={matched} cite={self.citation}"

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "rule": self.rule_id,
            "matched": list(self.matched_pair),
            "cite": self.citation,
        }


def display_name(g: Graph) -> str:
    expr = recognize(g)
    if expr is not None:
        return format_name(expr)
    return f"graph6:{to_graph6(g)}"


# -- pattern catalog -------------------------------------------------------

_DOWN = (
    "P4",
    "P1+P3",
    "2P1+P2",
    "P1+P4",
    "4P1",
    "K1_3",
    "2P1+P3",
    "3P1+P2",
    "P2+P3",
    "P5",
    "K1_3+3P1",
    "K1_3+P2",
    "P1+S_1_1_2",
    "P6",
    "S_1_1_3",
)
_UP = (
    "K1_3",
    "2P2",
    "4P1",
    "P1+P4",
    "P2+P4",
    "2P1+P2",
    "5P1",
    "P6",
    "3P1",
    "2P1+2P2",
    "2P1+P4",
    "4P1+P2",
    "3P2",
    "2P3",
    "3P1+P2",
)


@lru_cache(maxsize=None)
def _pattern(name: str) -> Graph:
    return graph_named(name)


@dataclass(frozen=True)
class CwFacts:
    """Containment facts of one graph, as consumed by the rule tables."""

    le: frozenset[str]
    ge: frozenset[str]
    in_s: bool
    edgeless: bool
    complete: bool


_FACTS_CACHE: dict[Graph, CwFacts] = {}


def cw_facts(g: Graph) -> CwFacts:
    cached = _FACTS_CACHE.get(g)
    if cached is not None:
        return cached
    le = frozenset(x for x in _DOWN if contains_induced(_pattern(x), g) is not None)
    ge = frozenset(x for x in _UP if contains_induced(g, _pattern(x)) is not None)
    shp = shape_tests(g)
    facts = CwFacts(le, ge, in_class_S(g), shp.is_edgeless, shp.is_complete)
    _FACTS_CACHE[g] = facts
    return facts


# Each rule is a conjunction of one predicate per position; symmetric use is
# obtained by testing both orderings of the pair.  Predicates see the facts
# of the graph and of its complement.
Side = Callable[[CwFacts, CwFacts], bool]


@dataclass(frozen=True)
class Rule:
    rule_id: str
    status: Status
    left: Side
    right: Side
    citation: str


def _le(*names: str) -> Side:
    keys = frozenset(names)
    return lambda f, fc: bool(keys & f.le)


def _co_le(*names: str) -> Side:
    keys = frozenset(names)
    return lambda f, fc: bool(keys & fc.le)


def _ge(*names: str) -> Side:
    keys = frozenset(names)
    return lambda f, fc: bool(keys & f.ge)


def _co_ge(*names: str) -> Side:
    keys = frozenset(names)
    return lambda f, fc: bool(keys & fc.ge)


_ALWAYS: Side = lambda f, fc: True

PAIR_RULES: tuple[Rule, ...] = (
    Rule("B1", Status.BOUNDED, _le("P4"), _ALWAYS, "cographs have clique-width at most 2 [CO00]"),
    Rule(
        "B2",
        Status.BOUNDED,
        lambda f, fc: f.edgeless,
        lambda f, fc: f.complete,
        "Ramsey: forbidding sP1 and Kt bounds the order of every member",
    ),
    Rule(
        "B3",
        Status.BOUNDED,
        _le("P1+P3"),
        _co_le("K1_3+3P1", "K1_3+P2", "P1+S_1_1_2", "P6", "S_1_1_3"),
        "triangle side via the paw reduction [Olariu 88]; lists from [DLRR12, BKM06] "
        "and the two matching-structure bounds",
    ),
    Rule(
        "B4",
        Status.BOUNDED,
        _le("2P1+P2"),
        _co_le("2P1+P3", "3P1+P2", "P2+P3"),
        "[DHP0]",
    ),
    Rule(
        "B5",
        Status.BOUNDED,
        _le("P1+P4"),
        _co_le("P1+P4", "P5"),
        "[BLM04b, BLM04]",
    ),
    Rule("B6", Status.BOUNDED, _le("4P1"), _co_le("2P1+P3"), "[BDHP15]"),
    Rule("B7", Status.BOUNDED, _le("K1_3"), _co_le("K1_3"), "[BL02, BM02]"),
    Rule(
        "U1",
        Status.UNBOUNDED,
        lambda f, fc: not f.in_s,
        lambda f, fc: not f.in_s,
        "k-subdivided walls avoid every family outside class S [LR06]",
    ),
    Rule(
        "U2",
        Status.UNBOUNDED,
        lambda f, fc: not fc.in_s,
        lambda f, fc: not fc.in_s,
        "complement of the class-S rule [LR06 with KLM09]",
    ),
    Rule(
        "U3",
        Status.UNBOUNDED,
        _ge("K1_3", "2P2"),
        _co_ge("4P1", "2P2"),
        "[BELL06] and split graphs [MR99]",
    ),
    Rule(
        "U4",
        Status.UNBOUNDED,
        _ge("P1+P4"),
        _co_ge("P2+P4"),
        "two-clique cell-array family: (3P2,P2+P4,P6,co(P1+P4))-free, unbounded",
    ),
    Rule(
        "U5",
        Status.UNBOUNDED,
        _ge("2P1+P2"),
        _co_ge("K1_3", "5P1", "P2+P4", "P6"),
        "[BELL06]; [DGP14]; [DHP0, preprint version only] for the P2+P4 case; "
        "flipped triple-cell family for the P6 case",
    ),
    Rule(
        "U6",
        Status.UNBOUNDED,
        _ge("3P1"),
        _co_ge("2P1+2P2", "2P1+P4", "4P1+P2", "3P2", "2P3"),
        "complements of H-free bipartite graphs [DP14]",
    ),
    Rule(
        "U7",
        Status.UNBOUNDED,
        _ge("4P1"),
        _co_ge("P1+P4", "3P1+P2"),
        "simple path encodings [KS12, Sc15] and [DGP14]",
    ),
)

BOUNDED_RULES = tuple(r for r in PAIR_RULES if r.status is Status.BOUNDED)
UNBOUNDED_RULES = tuple(r for r in PAIR_RULES if r.status is Status.UNBOUNDED)


# -- the thirteen open cases ----------------------------------------------

_OPEN_TABLE = (
    ("OPEN1", "3P1", ("P1+P2+P3", "P1+2P2", "P1+P5", "P1+S_1_1_3", "P2+P4", "S_1_2_2", "S_1_2_3")),
    ("OPEN2", "2P1+P2", ("P1+P2+P3", "P1+2P2", "P1+P5")),
    ("OPEN3", "P1+P4", ("P1+2P2", "P2+P3")),
    ("OPEN4", "2P1+P3", ("2P1+P3",)),
)


def _open_cases() -> tuple[tuple[str, str, str], ...]:
    out = []
    for case_id, h1, h2_complements in _OPEN_TABLE:
        for t, co_h2 in enumerate(h2_complements, start=1):
            sub = f"{case_id}.{t}" if len(h2_complements) > 1 else case_id
            out.append((sub, h1, f"co({co_h2})"))
    return tuple(out)


OPEN_CASES: tuple[tuple[str, str, str], ...] = _open_cases()


# -- equivalence closure ---------------------------------------------------


def _pair_iso(a: tuple[Graph, Graph], b: tuple[Graph, Graph]) -> bool:
    return (is_isomorphic(a[0], b[0]) and is_isomorphic(a[1], b[1])) or (
        is_isomorphic(a[0], b[1]) and is_isomorphic(a[1], b[0])
    )


def equivalence_class(h1: Graph, h2: Graph) -> list[tuple[Graph, Graph]]:
    """All unordered pairs reachable by complementing both sides and by
    swapping K3 with the paw at either position, deduplicated up to
    isomorphism."""
    k3 = _pattern("K3")
    paw = _pattern("paw")
    members: list[tuple[Graph, Graph]] = []
    queue: list[tuple[Graph, Graph]] = [(h1, h2)]
    while queue:
        pair = queue.pop()
        if any(_pair_iso(pair, m) for m in members):
            continue
        members.append(pair)
        a, b = pair
        queue.append((complement(a), complement(b)))
        for x, y in ((a, b), (b, a)):
            if is_isomorphic(x, k3):
                queue.append((paw, y))
            elif is_isomorphic(x, paw):
                queue.append((k3, y))
    return members


# -- classifiers ------------------------------------------------------------


def classify_single(h: Graph) -> Verdict:
    """One forbidden induced subgraph: bounded iff it embeds in P4."""
    bounded = contains_induced(_pattern("P4"), h) is not None
    return Verdict(
        Status.BOUNDED if bounded else Status.UNBOUNDED,
        "SG",
        (display_name(h),),
        "bounded exactly for the six induced subgraphs of P4 [CO00, LR06]",
    )


def classify_pair(h1: Graph, h2: Graph) -> Verdict:
    """Two forbidden induced subgraphs: Bounded, Unbounded, or Open; total."""
    members = equivalence_class(h1, h2)
    fired: list[tuple[Rule, tuple[Graph, Graph]]] = []
    for a, b in members:
        fa, fca = cw_facts(a), cw_facts(complement(a))
        fb, fcb = cw_facts(b), cw_facts(complement(b))
        for rule in PAIR_RULES:
            if rule.left(fa, fca) and rule.right(fb, fcb):
                fired.append((rule, (a, b)))
            elif rule.left(fb, fcb) and rule.right(fa, fca):
                fired.append((rule, (b, a)))
    statuses = {rule.status for rule, _ in fired}
    if Status.BOUNDED in statuses and Status.UNBOUNDED in statuses:
        b_hit = next(r.rule_id for r, _ in fired if r.status is Status.BOUNDED)
        u_hit = next(r.rule_id for r, _ in fired if r.status is Status.UNBOUNDED)
        raise InvariantViolation(
            f"rules {b_hit} and {u_hit} both fire on the class of "
            f"({display_name(h1)},{display_name(h2)})-free graphs"
        )
    if fired:
        rule, (a, b) = fired[0]
        return Verdict(
            rule.status,
            rule.rule_id,
            (display_name(a), display_name(b)),
            rule.citation,
        )
    for case_id, n1, n2 in OPEN_CASES:
        x, y = _pattern(n1), _pattern(n2)
        for pair in members:
            if _pair_iso(pair, (x, y)):
                return Verdict(
                    Status.OPEN,
                    case_id,
                    (n1, n2),
                    "boundedness open; one of the thirteen listed cases",
                )
    raise InvariantViolation(
        f"({display_name(h1)},{display_name(h2)}) matches no rule and no open case; "
        "the trichotomy should be total"
    )


_RELATIONS = ("subgraph", "minor", "topological-minor")


def classify_relation(family: list[Graph], relation: str) -> Verdict:
    """Forbidden subgraphs, minors, or topological minors (each a dichotomy)."""
    if relation not in _RELATIONS:
        raise InputError(f"relation must be one of {_RELATIONS}, got {relation!r}")
    if not family:
        raise InputError("the forbidden family must be non-empty")
    if relation == "subgraph":
        rule, cite = "REL-SUBGRAPH", (
            "bounded iff some member lies in class S [BL02]; otherwise a suitable "
            "k-subdivided wall family avoids all members [LR06]"
        )
        witness = next((g for g in family if in_class_S(g)), None)
    elif relation == "minor":
        rule, cite = "REL-MINOR", (
            "bounded iff some member is planar: excluded planar minors bound "
            "tree-width [RS86] and tree-width bounds clique-width [CR05]; "
            "otherwise all walls survive"
        )
        witness = next((g for g in family if is_planar(g)), None)
    else:
        rule, cite = "REL-TOPMINOR", (
            "bounded iff some member is planar with maximum degree at most 3 "
            "(minor containment transfers at degree <= 3); otherwise all walls survive"
        )
        witness = next(
            (g for g in family if is_planar(g) and g.max_degree() <= 3), None
        )
    if witness is not None:
        return Verdict(Status.BOUNDED, rule, (display_name(witness),), cite)
    return Verdict(
        Status.UNBOUNDED, rule, tuple(display_name(g) for g in family), cite
    )


# -- colouring table --------------------------------------------------------

_COL_GE = (
    "K1_3",
    "K1_4",
    "K1_5",
    "K3",
    "K4",
    "bull",
    "diamond",
    "C3+P1",
    "C4+P1",
    "P22",
)
_COL_LE = (
    "P1+P3",
    "P4",
    "K1_3",
    "bull",
    "hammer",
    "P5",
    "paw",
    "gem",
    "co(P5)",
    "2P1+P2",
    "co(3P1+P2)",
    "co(2P1+P3)",
    "diamond",
    "3P1+P2",
    "2P1+P3",
    "4P1",
    "C4",
    "P1+P4",
)
_SPANNING_2P2 = ("2P2", "2P1+P2", "4P1")


@dataclass(frozen=True)
class ColFacts:
    le: frozenset[str]
    ge: frozenset[str]
    flags: frozenset[str]


_COL_CACHE: dict[Graph, ColFacts] = {}


def colouring_facts(g: Graph) -> ColFacts:
    cached = _COL_CACHE.get(g)
    if cached is not None:
        return cached
    le = frozenset(x for x in _COL_LE if contains_induced(_pattern(x), g) is not None)
    ge = frozenset(x for x in _COL_GE if contains_induced(g, _pattern(x)) is not None)
    flags = set()
    shp = shape_tests(g)
    co = complement(g)
    if not shp.is_forest:
        flags.add("has-cycle")
        if has_induced_cycle_at_least(g, 4, max_vertices=g.n):
            flags.add("has-cycle>=4")
        if has_induced_cycle_at_least(g, 5, max_vertices=g.n):
            flags.add("has-cycle>=5")
    if not shape_tests(co).is_forest and has_induced_cycle_at_least(co, 6, max_vertices=co.n):
        flags.add("co-has-cycle>=6")
    if any(contains_induced(g, _pattern(x)) is not None for x in _SPANNING_2P2):
        flags.add("spanning-2P2")
    if g.max_degree() <= 1:
        flags.add("matching")
    nontrivial = [v for v in range(g.n) if g.degree(v) > 0]
    if contains_induced(_pattern("P5"), induced_subgraph(g, nontrivial)) is not None:
        flags.add("isolates-plus-P5-part")
    if shp.is_complete and g.n >= 4:
        flags.add("clique>=4")
    if len(g.edges) <= 1:
        flags.add("at-most-one-edge")
    if len(co.edges) <= 1:
        flags.add("co-at-most-one-edge")
    if is_isomorphic(g, _pattern("2P2")):
        flags.add("is-2P2")
    if shp.is_forest and g.n <= 6 and not is_isomorphic(g, _pattern("K1_5")):
        flags.add("small-forest-not-K1_5")
    if is_isomorphic(g, _pattern("K1_3+3P1")):
        flags.add("is-K1_3+3P1")
    facts = ColFacts(le, ge, frozenset(flags))
    _COL_CACHE[g] = facts
    return facts


ColSide = Callable[[ColFacts], bool]


@dataclass(frozen=True)
class ColRule:
    rule_id: str
    status: Status
    left: ColSide
    right: ColSide
    citation: str


def _cge(*names: str) -> ColSide:
    keys = frozenset(names)
    return lambda f: bool(keys & f.ge)


def _cle(*names: str) -> ColSide:
    keys = frozenset(names)
    return lambda f: bool(keys & f.le)


def _flag(*names: str) -> ColSide:
    keys = frozenset(names)
    return lambda f: bool(keys & f.flags)


COLOURING_RULES: tuple[ColRule, ...] = (
    ColRule("COL-N1", Status.NP_COMPLETE, _flag("has-cycle"), _flag("has-cycle"),
            "both sides keep some chordless cycle"),
    ColRule("COL-N2", Status.NP_COMPLETE, _cge("K1_3"), _cge("K1_3"),
            "both sides keep the claw"),
    ColRule("COL-N3", Status.NP_COMPLETE, _flag("spanning-2P2"), _flag("spanning-2P2"),
            "both sides keep a spanning subgraph of 2P2 induced"),
    ColRule("COL-N4", Status.NP_COMPLETE, _cge("bull"), _cge("K1_4"),
            "bull versus K1_4"),
    ColRule("COL-N5", Status.NP_COMPLETE, _cge("K3"), _cge("K1_5"),
            "triangle versus K1_r, r >= 5"),
    ColRule("COL-N6", Status.NP_COMPLETE, _flag("has-cycle>=4"), _cge("K1_3"),
            "chordless cycle of length >= 4 versus the claw"),
    ColRule("COL-N7", Status.NP_COMPLETE, _cge("K3"), _cge("P22"),
            "triangle versus the 22-vertex path (constant taken verbatim)"),
    ColRule("COL-N8", Status.NP_COMPLETE, _flag("has-cycle>=5"), _flag("spanning-2P2"),
            "chordless cycle of length >= 5 versus a spanning subgraph of 2P2"),
    ColRule("COL-N9", Status.NP_COMPLETE,
            lambda f: bool(f.ge & {"C3+P1", "C4+P1"}) or "co-has-cycle>=6" in f.flags,
            _flag("spanning-2P2"),
            "cycle-plus-vertex or long anticycle versus a spanning subgraph of 2P2"),
    ColRule("COL-N10", Status.NP_COMPLETE, _cge("K4", "diamond"), _cge("K1_3"),
            "K4 or the diamond versus the claw"),
    ColRule("COL-P1", Status.POLYNOMIAL, _cle("P1+P3", "P4"), lambda f: True,
            "one side inside P1+P3 or P4"),
    ColRule("COL-P2", Status.POLYNOMIAL, _cle("K1_3"), _cle("bull", "hammer", "P5"),
            "claw-side pairs"),
    ColRule("COL-P3", Status.POLYNOMIAL, _flag("small-forest-not-K1_5", "is-K1_3+3P1"), _cle("paw"),
            "small forests (not K1_5) or K1_3+3P1 versus the paw"),
    ColRule("COL-P4", Status.POLYNOMIAL, _flag("matching", "isolates-plus-P5-part"), _flag("clique>=4"),
            "matchings or P5-plus-isolates versus a clique"),
    ColRule("COL-P5", Status.POLYNOMIAL, _flag("matching", "isolates-plus-P5-part"), _cle("paw"),
            "matchings or P5-plus-isolates versus the paw"),
    ColRule("COL-P6", Status.POLYNOMIAL, _cle("P1+P4", "P5"), _cle("gem"),
            "P1+P4 or P5 versus the gem"),
    ColRule("COL-P7", Status.POLYNOMIAL, _cle("P1+P4", "P5"), _cle("co(P5)"),
            "P1+P4 or P5 versus co(P5)"),
    ColRule("COL-P8", Status.POLYNOMIAL, _cle("2P1+P2"), _cle("co(3P1+P2)", "co(2P1+P3)"),
            "2P1+P2 versus small complements"),
    ColRule("COL-P9", Status.POLYNOMIAL, _cle("diamond"), _cle("3P1+P2", "2P1+P3"),
            "the diamond versus small linear forests"),
    ColRule("COL-P10", Status.POLYNOMIAL,
            lambda f: "at-most-one-edge" in f.flags or "is-2P2" in f.flags,
            _flag("co-at-most-one-edge"),
            "near-edgeless versus near-complete"),
    ColRule("COL-P11", Status.POLYNOMIAL, _cle("4P1"), _cle("co(2P1+P3)"),
            "4P1 versus co(2P1+P3)"),
    ColRule("COL-P12", Status.POLYNOMIAL, _cle("P5"), _cle("C4", "co(2P1+P3)"),
            "P5 versus C4 or co(2P1+P3)"),
)


COLOURING_OPEN_CASES: tuple[tuple[str, str], ...] = (
    ("co(3P1)", "P1+S_1_1_3"),
    ("co(3P1)", "S_1_2_3"),
    ("co(P1+P3)", "P1+S_1_1_3"),
    ("co(P1+P3)", "S_1_2_3"),
    ("2P1+P2", "co(P1+P2+P3)"),
    ("2P1+P2", "co(P1+2P2)"),
    ("2P1+P2", "co(P1+P5)"),
    ("co(2P1+P2)", "P1+P2+P3"),
    ("co(2P1+P2)", "P1+2P2"),
    ("co(2P1+P2)", "P1+P5"),
    ("P1+P4", "co(P1+2P2)"),
    ("P1+P4", "co(P2+P3)"),
    ("co(P1+P4)", "P1+2P2"),
    ("co(P1+P4)", "P2+P3"),
    ("2P1+P3", "co(2P1+P3)"),
)


def classify_colouring(h1: Graph, h2: Graph) -> Verdict:
    """Colouring complexity for the pair; Unknown when no table row applies."""
    fa, fb = colouring_facts(h1), colouring_facts(h2)
    fired: list[tuple[ColRule, tuple[Graph, Graph]]] = []
    for rule in COLOURING_RULES:
        if rule.left(fa) and rule.right(fb):
            fired.append((rule, (h1, h2)))
        elif rule.left(fb) and rule.right(fa):
            fired.append((rule, (h2, h1)))
    statuses = {rule.status for rule, _ in fired}
    if Status.NP_COMPLETE in statuses and Status.POLYNOMIAL in statuses:
        n_hit = next(r.rule_id for r, _ in fired if r.status is Status.NP_COMPLETE)
        p_hit = next(r.rule_id for r, _ in fired if r.status is Status.POLYNOMIAL)
        raise InvariantViolation(
            f"colouring rules {n_hit} and {p_hit} both fire on "
            f"({display_name(h1)},{display_name(h2)})"
        )
    if fired:
        rule, (a, b) = fired[0]
        return Verdict(rule.status, rule.rule_id, (display_name(a), display_name(b)), rule.citation)
    return Verdict(
        Status.UNKNOWN,
        "COL-OPEN",
        (display_name(h1), display_name(h2)),
        "outside both colouring tables; complexity unresolved",
    )
