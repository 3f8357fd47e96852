import random

import networkx as nx
import pytest

from cwkit.errors import InputError, ParseError
from cwkit.graphs import (
    ComplementBipartite,
    ComplementSubgraph,
    ContractEdge,
    DeleteVertex,
    DissolveVertex,
    Graph,
    SubdivideEdge,
    complement,
    complement_bipartite,
    disjoint_union,
    from_edge_list,
    from_graph6,
    induced_subgraph,
    to_edge_list,
    to_graph6,
    transform,
)
from cwkit.isomorphism import is_isomorphic
from cwkit.names import graph_named
from cwkit.witnesses import wall


def random_graph(rng, n, p=0.4):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def test_construction_rejects_bad_edges():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])
    with pytest.raises(InputError):
        Graph(-1)


def test_complement_fixtures():
    assert is_isomorphic(complement(graph_named("K3")), graph_named("3P1"))
    assert is_isomorphic(complement(graph_named("P4")), graph_named("P4"))
    assert is_isomorphic(complement(graph_named("2P2")), graph_named("C4"))


def test_complement_involution():
    rng = random.Random(11)
    for n in range(0, 9):
        for _ in range(30):
            g = random_graph(rng, n)
            assert complement(complement(g)) == g


def test_disjoint_union_fixtures():
    two = disjoint_union(graph_named("P2"), graph_named("P2"))
    assert two.n == 4 and len(two.edges) == 2
    g = graph_named("C5")
    assert disjoint_union(g, Graph(0)) == g
    three = disjoint_union(disjoint_union(Graph(1), Graph(1)), Graph(1))
    assert is_isomorphic(three, graph_named("3P1"))


def test_induced_subgraph_fixtures():
    c5 = graph_named("C5")
    assert is_isomorphic(induced_subgraph(c5, [0, 1, 2, 3]), graph_named("P4"))
    assert induced_subgraph(c5, range(5)) == c5
    assert is_isomorphic(induced_subgraph(graph_named("K4"), [1, 2, 3]), graph_named("K3"))
    with pytest.raises(InputError):
        induced_subgraph(c5, [4, 5])


def test_subdivide_and_dissolve():
    p2 = graph_named("P2")
    p3 = transform(p2, SubdivideEdge(0, 1))
    assert is_isomorphic(p3, graph_named("P3"))
    back = transform(p3, DissolveVertex(2))
    assert is_isomorphic(back, p2)
    with pytest.raises(InputError):
        transform(p2, SubdivideEdge(0, 0))
    with pytest.raises(InputError):
        transform(graph_named("P4"), DissolveVertex(0))  # degree 1
    with pytest.raises(InputError):
        transform(graph_named("K3"), DissolveVertex(0))  # neighbours adjacent


def test_subdivide_dissolve_inverse_property():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8))
        if not g.edges:
            continue
        u, v = sorted(g.edges)[rng.randrange(len(g.edges))]
        sub = transform(g, SubdivideEdge(u, v))
        restored = transform(sub, DissolveVertex(g.n))
        assert is_isomorphic(restored, g)


def test_contract_fixtures():
    c4 = graph_named("C4")
    u, v = sorted(c4.edges)[0]
    assert is_isomorphic(transform(c4, ContractEdge(u, v)), graph_named("K3"))
    with pytest.raises(InputError):
        transform(graph_named("2P2"), ContractEdge(0, 2))


def test_contract_matches_networkx():
    rng = random.Random(23)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8))
        if not g.edges:
            continue
        u, v = sorted(g.edges)[rng.randrange(len(g.edges))]
        mine = transform(g, ContractEdge(u, v))
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges)
        H = nx.contracted_nodes(G, u, v, self_loops=False)
        assert mine.n == H.number_of_nodes()
        assert len(mine.edges) == H.number_of_edges()
        theirs = nx.Graph()
        relabel = {x: i for i, x in enumerate(sorted(H.nodes()))}
        theirs.add_nodes_from(range(mine.n))
        theirs.add_edges_from((relabel[a], relabel[b]) for a, b in H.edges())
        assert is_isomorphic(mine, Graph(mine.n, theirs.edges()))


def test_subgraph_complementation():
    k4 = graph_named("K4")
    assert transform(k4, ComplementSubgraph(range(4))).edges == frozenset()
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        inside = [v for v in range(g.n) if rng.random() < 0.5]
        once = transform(g, ComplementSubgraph(inside))
        twice = transform(once, ComplementSubgraph(inside))
        assert twice == g


def test_bipartite_complementation():
    two_p2 = Graph(4, [(0, 1), (2, 3)])
    flipped = transform(two_p2, ComplementBipartite([0, 1], [2, 3]))
    # the four cross pairs flip from non-edges to edges; the two original
    # edges lie inside the parts and stay put
    assert is_isomorphic(flipped, graph_named("K4"))
    with pytest.raises(InputError):
        transform(two_p2, ComplementBipartite([0, 1], [1, 2]))


def test_bipartite_complementation_involution_and_count():
    rng = random.Random(13)
    for _ in range(80):
        g = random_graph(rng, rng.randint(2, 8))
        n = g.n
        verts = list(range(n))
        rng.shuffle(verts)
        cut = rng.randint(0, n)
        x, y = verts[:cut], verts[cut:]
        before_cross = sum(1 for u in x for v in y if g.has_edge(u, v))
        once = complement_bipartite(g, x, y)
        assert len(once.edges) == len(g.edges) - before_cross + (len(x) * len(y) - before_cross)
        assert complement_bipartite(once, x, y) == g


def test_delete_vertex_renumbers():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)], names={3: "end"})
    h = transform(g, DeleteVertex(1))
    assert h.n == 3 and h.edges == frozenset({(1, 2)})
    assert h.names == {2: "end"}


def test_basic_queries():
    c7 = graph_named("C7")
    assert c7.max_degree() == 2
    assert c7.is_connected()
    assert c7.bipartition() is None
    assert wall(3).max_degree() == 3
    g = graph_named("2P3")
    assert len(g.components()) == 2
    assert g.bipartition() is not None
    assert Graph(1).is_connected()
    assert Graph(0).is_connected()


def test_basic_queries_record():
    from cwkit.graphs import basic_queries

    rec = basic_queries(graph_named("C7"))
    assert rec.max_degree == 2 and rec.is_connected and rec.bipartition is None
    rec = basic_queries(graph_named("2P3"))
    assert len(rec.components) == 2 and rec.bipartition is not None
    assert rec.degrees == (1, 2, 1, 1, 2, 1)


def test_graph6_round_trip_enumerated():
    from cwkit.enumeration import nonisomorphic_graphs_upto

    for g in nonisomorphic_graphs_upto(6):
        assert from_graph6(to_graph6(g)) == g


def test_graph6_matches_networkx():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(0, 40)
        g = random_graph(rng, n, p=0.3)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(g.edges)
        assert to_graph6(g) == nx.to_graph6_bytes(G, header=False).decode().strip()


def test_graph6_header_and_errors():
    g = graph_named("P4")
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g
    with pytest.raises(ParseError):
        from_graph6("")
    with pytest.raises(ParseError):
        from_graph6("D")  # truncated body
    with pytest.raises(ParseError):
        from_graph6("D\x1f\x1f")  # bytes below 63


def test_graph6_large_n():
    big = Graph(80, [(0, 79), (1, 2)])
    assert from_graph6(to_graph6(big)) == big


def test_edge_list_round_trip():
    g = graph_named("C5")
    assert from_edge_list(to_edge_list(g)) == g
    with pytest.raises(ParseError):
        from_edge_list("not a header\n")
    with pytest.raises(ParseError):
        from_edge_list("2 1\n")  # declared edge missing
