import io
import random

import pytest

import oracles
from ifcs.errors import GraphError, ParseError
from ifcs.hin import Hin, load_graph, weakly_connected_components, write_graph


def small_graph():
    g = Hin()
    for name, label in [("a", "A"), ("b", "B"), ("c", "A"), ("d", "C")]:
        g.add_vertex(name, label)
    g.add_edge(0, 1)
    g.add_edge(2, 1)
    g.add_edge(1, 3)
    return g


def test_duplicate_edges_collapse():
    g = small_graph()
    assert g.n_edges == 3
    assert g.add_edge(0, 1) is False
    assert g.n_edges == 3
    assert g.duplicate_edges == 1


def test_self_loop_rejected():
    g = small_graph()
    with pytest.raises(GraphError):
        g.add_edge(1, 1)


def test_duplicate_vertex_rejected():
    g = small_graph()
    with pytest.raises(GraphError):
        g.add_vertex("a", "A")


def test_unknown_endpoint_rejected():
    g = small_graph()
    with pytest.raises(GraphError):
        g.add_edge(0, 99)


def test_adjacency_sorted_and_has_edge():
    g = small_graph()
    assert g.out_adj[0] == [1]
    assert g.in_adj[1] == [0, 2]
    assert g.has_edge(0, 1) and not g.has_edge(1, 0)
    assert g.undirected_neighbors(1) == [0, 2, 3]


def test_nlf_counts():
    g = small_graph()
    a = g.label_code["A"]
    c = g.label_code["C"]
    assert g.nlf_counts(1, a) == (2, 0)
    assert g.nlf_counts(1, c) == (0, 1)
    assert g.nlf_counts(0, a) == (0, 0)


def test_nlf_tracks_random_mutations():
    rng = random.Random(11)
    g = Hin()
    labels = ["A", "B", "C"]
    for i in range(30):
        g.add_vertex("v%d" % i, rng.choice(labels))
    alive = set(range(30))
    for _ in range(1000):
        op = rng.random()
        if op < 0.75 or len(alive) < 5:
            pair = rng.sample(sorted(alive), 2)
            g.add_edge(pair[0], pair[1])
        else:
            victim = rng.choice(sorted(alive))
            g.delete_vertices([victim])
            alive.discard(victim)
        # invariant check against full recomputation
    fresh = g.recompute_nlf()
    assert {v: dict(d) for v, d in g.nlf.items()} == \
        {v: dict(d) for v, d in fresh.items()}
    assert g.n_edges == sum(1 for _ in g.edges())


def test_delete_vertices_batch():
    g = small_graph()
    g.delete_vertices([1])
    assert g.n_vertices == 3
    assert g.n_edges == 0
    assert g.out_adj[0] == []
    assert not g.has_vertex(1)
    with pytest.raises(GraphError):
        g.delete_vertices([1])


def test_delete_internal_edge_counting():
    g = small_graph()
    g.add_edge(0, 2)
    g.delete_vertices([0, 2])
    assert g.n_edges == 1  # only b->d remains
    assert g.has_edge(1, 3)


def test_induced_subgraph_shares_tables():
    g = small_graph()
    sub = g.induced_subgraph({(0, 1), (1, 3)})
    assert sub.ext_ids is g.ext_ids
    assert sorted(sub.vtype) == [0, 1, 3]
    assert sub.has_edge(0, 1) and sub.has_edge(1, 3)
    assert not sub.has_edge(2, 1)
    assert sub.n_edges == 2
    with pytest.raises(GraphError):
        g.induced_subgraph({(3, 0)})


def test_wcc_against_union_find():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 40)
        g = Hin()
        for i in range(n):
            g.add_vertex("v%d" % i, "T")
        edges = []
        for _ in range(rng.randint(0, 2 * n)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v and g.add_edge(u, v):
                edges.append((u, v))
        assert weakly_connected_components(g) == \
            oracles.union_find_components(g.vertices(), edges)


def test_load_graph_round_trip():
    g = small_graph()
    vbuf, ebuf = io.StringIO(), io.StringIO()
    write_graph(g, vbuf, ebuf)
    g2 = load_graph(io.StringIO(vbuf.getvalue()), io.StringIO(ebuf.getvalue()))
    assert g2.ext_ids == g.ext_ids
    assert list(g2.edges()) == list(g.edges())
    # serialization is stable
    vbuf2, ebuf2 = io.StringIO(), io.StringIO()
    write_graph(g2, vbuf2, ebuf2)
    assert vbuf2.getvalue() == vbuf.getvalue()
    assert ebuf2.getvalue() == ebuf.getvalue()


def test_load_graph_comments_and_blank_lines():
    g = load_graph(io.StringIO("# people\nx\tA\n\ny\tB\n"),
                   io.StringIO("# links\nx\ty\n"))
    assert g.n_vertices == 2 and g.n_edges == 1


@pytest.mark.parametrize("vtext,etext,line_no", [
    ("x\tA\tjunk\n", "", 1),
    ("x\tA\nx\tA\n", "", 2),
    ("x\t\n", "", 1),
    ("x\tA\n", "x\n", 1),
    ("x\tA\n", "x\tz\n", 1),
    ("x\tA\ny\tB\n", "x\ty\nx\tx\n", 2),
])
def test_parse_errors_carry_line_numbers(vtext, etext, line_no):
    with pytest.raises(ParseError) as err:
        load_graph(io.StringIO(vtext), io.StringIO(etext))
    assert err.value.line_no == line_no
