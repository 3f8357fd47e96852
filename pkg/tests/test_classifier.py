import random

import pytest

from cwkit.classifier import (
    COLOURING_OPEN_CASES,
    OPEN_CASES,
    Status,
    classify_colouring,
    classify_pair,
    classify_relation,
    classify_single,
    display_name,
    equivalence_class,
)
from cwkit.enumeration import nonisomorphic_graphs_upto
from cwkit.errors import InputError
from cwkit.graphs import complement
from cwkit.isomorphism import is_isomorphic
from cwkit.names import graph_named


def test_single_dichotomy():
    for name in ("P1", "2P1", "P1+P2", "P2", "P3", "P4"):
        assert classify_single(graph_named(name)).status is Status.BOUNDED
    for name in ("2P2", "C5", "K1_3", "P5", "3P1+P2"):
        assert classify_single(graph_named(name)).status is Status.UNBOUNDED


def test_equivalence_class_fixtures():
    cls = equivalence_class(graph_named("K3"), graph_named("P5"))
    shown = {tuple(sorted((display_name(a), display_name(b)))) for a, b in cls}
    assert shown == {
        ("K3", "P5"),
        ("P5", "paw"),
        ("3P1", "co(P5)"),
        ("P1+P3", "co(P5)"),
    }
    assert len(equivalence_class(graph_named("P4"), graph_named("P4"))) == 1
    assert len(equivalence_class(graph_named("C5"), graph_named("C5"))) == 1


@pytest.mark.parametrize(
    "n1,n2,status,rule",
    [
        ("K1_3", "co(K1_3)", Status.BOUNDED, "B7"),
        ("K4", "2P2", Status.UNBOUNDED, "U3"),
        ("K3", "S_1_2_2", Status.OPEN, "OPEN1.6"),
        ("K3", "S_1_2_3", Status.OPEN, "OPEN1.7"),
        ("3P1", "co(2P1+P3)", Status.BOUNDED, None),
        ("paw", "K1_3+3P1", Status.BOUNDED, None),
        ("paw", "P1+S_1_1_2", Status.BOUNDED, None),
        ("P6", "co(2P1+P2)", Status.UNBOUNDED, None),
        ("co(P1+P4)", "P2+P4", Status.UNBOUNDED, None),
        ("P4", "C5", Status.BOUNDED, "B1"),
        ("5P1", "K4", Status.BOUNDED, "B2"),
        ("2P1+P3", "co(2P1+P3)", Status.OPEN, "OPEN4"),
        ("C5", "C5", Status.UNBOUNDED, None),
    ],
)
def test_pair_fixtures(n1, n2, status, rule):
    verdict = classify_pair(graph_named(n1), graph_named(n2))
    assert verdict.status is status
    if rule is not None:
        assert verdict.rule_id == rule
    assert verdict.matched_pair and verdict.citation


def test_pair_is_symmetric_and_complement_invariant():
    rng = random.Random(21)
    pool = nonisomorphic_graphs_upto(5)
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        base = classify_pair(a, b).status
        assert classify_pair(b, a).status is base
        assert classify_pair(complement(a), complement(b)).status is base


def test_pair_swap_on_triangle():
    k3, paw = graph_named("K3"), graph_named("paw")
    rng = random.Random(22)
    pool = nonisomorphic_graphs_upto(5)
    for _ in range(25):
        h = rng.choice(pool)
        assert classify_pair(k3, h).status is classify_pair(paw, h).status


def test_bounded_verdicts_carry_rule_trace():
    rng = random.Random(23)
    pool = nonisomorphic_graphs_upto(5)
    for _ in range(80):
        a, b = rng.choice(pool), rng.choice(pool)
        verdict = classify_pair(a, b)
        if verdict.status is Status.BOUNDED:
            assert verdict.rule_id.startswith("B")


def test_open_case_table_is_the_published_thirteen():
    assert len(OPEN_CASES) == 13
    seen = set()
    for case_id, n1, n2 in OPEN_CASES:
        verdict = classify_pair(graph_named(n1), graph_named(n2))
        assert verdict.status is Status.OPEN
        assert verdict.rule_id == case_id
        seen.add(case_id)
    assert len(seen) == 13


def test_relation_fixtures():
    assert classify_relation([graph_named("P4")], "subgraph").status is Status.BOUNDED
    assert classify_relation([graph_named("C3")], "subgraph").status is Status.UNBOUNDED
    assert classify_relation([graph_named("K4")], "minor").status is Status.BOUNDED
    assert (
        classify_relation([graph_named("K5"), graph_named("K6")], "minor").status
        is Status.UNBOUNDED
    )
    assert (
        classify_relation([graph_named("K4")], "topological-minor").status
        is Status.BOUNDED
    )
    assert (
        classify_relation([graph_named("K1_4")], "topological-minor").status
        is Status.UNBOUNDED
    )
    assert (
        classify_relation([graph_named("K5")], "topological-minor").status
        is Status.UNBOUNDED
    )
    # one good member is enough
    assert (
        classify_relation([graph_named("K5"), graph_named("P4")], "minor").status
        is Status.BOUNDED
    )


def test_relation_input_guards():
    with pytest.raises(InputError):
        classify_relation([], "minor")
    with pytest.raises(InputError):
        classify_relation([graph_named("P4")], "homomorphism")


def test_colouring_fixtures():
    v = classify_colouring(graph_named("K1_3"), graph_named("K1_3"))
    assert v.status is Status.NP_COMPLETE and v.rule_id == "COL-N2"
    v = classify_colouring(graph_named("P4"), graph_named("grid(3)"))
    assert v.status is Status.POLYNOMIAL and v.rule_id == "COL-P1"
    v = classify_colouring(graph_named("2P1+P2"), graph_named("co(P1+2P2)"))
    assert v.status is Status.UNKNOWN
    v = classify_colouring(graph_named("C5"), graph_named("C5"))
    assert v.status is Status.NP_COMPLETE and v.rule_id == "COL-N1"
    v = classify_colouring(graph_named("bull"), graph_named("K1_4"))
    assert v.status is Status.NP_COMPLETE
    v = classify_colouring(graph_named("3P2"), graph_named("K4"))
    assert v.status is Status.POLYNOMIAL and v.rule_id == "COL-P4"


def test_colouring_open_cases_fixture_table():
    assert len(COLOURING_OPEN_CASES) == 15
    for n1, n2 in COLOURING_OPEN_CASES:
        g1, g2 = graph_named(n1), graph_named(n2)
        v = classify_colouring(g1, g2)
        assert v.status is Status.UNKNOWN, (n1, n2, v.line())


def test_colouring_consistency_sampled_at_seven():
    # conflicts raise InvariantViolation inside classify_colouring
    rng = random.Random(55)
    pool = nonisomorphic_graphs_upto(7)
    for _ in range(1500):
        a, b = rng.choice(pool), rng.choice(pool)
        classify_colouring(a, b)


def test_colouring_orderings_agree():
    rng = random.Random(14)
    pool = nonisomorphic_graphs_upto(5)
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        assert classify_colouring(a, b).status is classify_colouring(b, a).status


def test_display_name_falls_back_to_graph6():
    from cwkit.graphs import Graph

    petersen = Graph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 7), (7, 9), (9, 6), (6, 8),
         (8, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
    )
    assert display_name(petersen).startswith("graph6:")
