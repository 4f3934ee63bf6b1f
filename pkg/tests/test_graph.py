import pytest
from hypothesis import given

from nonsep.graph import (
    Graph,
    GraphFormatError,
    complete_graph,
    cycle_graph,
    parse_edgelist,
    parse_graph6,
    path_graph,
    remove_vertices,
    serialize_edgelist,
    serialize_graph6,
)

from .conftest import graphs


def hand_graph6(n, edges):
    """Textbook graph6: size byte, then upper-triangle bits column by column, 6 per char."""
    es = {frozenset(e) for e in edges}
    bits = "".join("1" if frozenset((i, j)) in es else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[k:k + 6], 2)) for k in range(0, len(bits), 6))


def test_hand_oracle_values():
    # frozen from the bit-layout definition
    assert hand_graph6(4, complete_graph(4).edges()) == "C~"
    assert hand_graph6(3, complete_graph(3).edges()) == "Bw"
    assert hand_graph6(3, [(0, 1), (1, 2)]) == "Bg"
    assert hand_graph6(1, []) == "@"


@pytest.mark.parametrize("text,graph", [
    ("C~", complete_graph(4)),
    ("Bw", complete_graph(3)),
    ("Bg", path_graph(3)),
    ("@", Graph(1)),
    ("?", Graph(0)),
])
def test_graph6_fixed_points(text, graph):
    assert parse_graph6(text) == graph
    assert serialize_graph6(graph) == text


def test_bg_is_the_path_through_1():
    assert sorted(parse_graph6("Bg").edges()) == [(0, 1), (1, 2)]


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x01", "Cé", "B{"])
def test_graph6_rejects_malformed(bad):
    # "B{" has a nonzero padding bit
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_graph6_large_size_extension():
    g = cycle_graph(70)
    s = serialize_graph6(g)
    assert s[0] == "~" and parse_graph6(s) == g


@given(graphs(max_n=14))
def test_graph6_matches_hand_encoding_and_round_trips(g):
    s = serialize_graph6(g)
    assert s == hand_graph6(g.n, g.edges())
    assert parse_graph6(s) == g
    assert serialize_graph6(parse_graph6(s)) == s


def test_edgelist_examples():
    assert parse_edgelist("3 2\n0 1\n1 2") == path_graph(3)
    assert parse_edgelist("3 3\n0 1\n1 2\n0 2") == complete_graph(3)


@pytest.mark.parametrize("bad", ["2 1\n0 0", "3 1\n0 3", "3 2\n0 1\n1 0", "3 2\n0 1", "3\n0 1", "x y"])
def test_edgelist_errors(bad):
    with pytest.raises(GraphFormatError):
        parse_edgelist(bad)


@given(graphs())
def test_edgelist_round_trip(g):
    assert parse_edgelist(serialize_edgelist(g)) == g


def test_graph_invariants_enforced():
    with pytest.raises(GraphFormatError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphFormatError):
        Graph(3, [(0, 1), (1, 0)])
    g = Graph(4, [(2, 0), (0, 1), (3, 0)])
    assert g.adj[0] == (1, 2, 3)
    assert all(u in g.nbrs[v] for u in range(4) for v in g.adj[u])


def test_remove_vertices_examples():
    h, mp = remove_vertices(complete_graph(4), {3})
    assert h == complete_graph(3) and mp == {0: 0, 1: 1, 2: 2}
    h, mp = remove_vertices(cycle_graph(5), {0})
    assert h == path_graph(4) and mp == {1: 0, 2: 1, 3: 2, 4: 3}
    g = cycle_graph(6)
    h, mp = remove_vertices(g, set())
    assert h == g and mp == {v: v for v in range(6)}
    with pytest.raises(GraphFormatError):
        remove_vertices(g, {6})


@given(graphs(max_n=9), graphs(max_n=9))
def test_remove_vertices_edge_count(g, other):
    gone = {v for v in range(g.n) if v < other.n and other.degree(v) % 2}
    h, mp = remove_vertices(g, gone)
    assert h.m == sum(len(set(g.adj[v]) - gone) for v in range(g.n) if v not in gone) // 2
    for u, v in h.edges():
        inv = {b: a for a, b in mp.items()}
        assert g.has_edge(inv[u], inv[v])
