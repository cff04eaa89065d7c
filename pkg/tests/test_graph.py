import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybridwidth.corpus import complete, cycle, path, wheel
from hybridwidth.graph import (
    EdgeListError,
    Graph,
    Graph6HeaderError,
    Graph6TrailingDataError,
    Graph6TruncatedError,
    Separation,
    component_of,
    components_within,
    connected_components,
    encode_edge_list,
    encode_graph6,
    induced_subgraph,
    members,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    torso,
    vset,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def reference_g6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestGraph6:
    @pytest.mark.parametrize(
        "text, n, edges",
        [("?", 0, []), ("A_", 2, [(0, 1)]), ("Bw", 3, [(0, 1), (0, 2), (1, 2)])],
    )
    def test_known_strings(self, text, n, edges):
        g = parse_graph6(text)
        assert g.n == n
        assert g.edges() == edges
        assert reference_g6(g) == text

    def test_header_prefix_and_newline(self):
        assert parse_graph6(">>graph6<<Bw\n") == parse_graph6("Bw")

    def test_errors_are_distinct(self):
        with pytest.raises(Graph6HeaderError):
            parse_graph6(" ")
        with pytest.raises(Graph6HeaderError):
            parse_graph6("~~~")
        with pytest.raises(Graph6TruncatedError):
            parse_graph6("D")
        with pytest.raises(Graph6TrailingDataError):
            parse_graph6("Bw?")
        with pytest.raises(Graph6HeaderError):
            parse_graph6("B\x7f")

    @settings(max_examples=200, deadline=None)
    @given(graphs())
    def test_round_trip(self, g):
        text = encode_graph6(g)
        assert text == reference_g6(g)
        assert parse_graph6(text) == g


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("p edge 2 1\ne 1 2\n") == complete(2)
        assert parse_edge_list("p edge 3 0\n") == Graph.from_edges(3, [])
        assert parse_edge_list("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete(3)

    def test_duplicates_collapse(self):
        g = parse_edge_list("c dup\np edge 2 2\ne 1 2\ne 2 1\n")
        assert g.m == 1

    @pytest.mark.parametrize(
        "text",
        ["p edge 2 2\ne 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\ne 2 2\n", "e 1 2\n", "p edge 2 1\nx 1 2\n"],
    )
    def test_rejects(self, text):
        with pytest.raises(EdgeListError):
            parse_edge_list(text)

    def test_round_trip(self):
        g = wheel(6)
        assert parse_edge_list(encode_edge_list(g)) == g


class TestGraphInvariants:
    def test_rejects_self_loop_and_asymmetry(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0))

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_components_partition(self, g):
        comps = connected_components(g)
        union = 0
        for c in comps:
            assert union & c == 0
            union |= c
            assert component_of(g.adj, members(c)[0], c) == c
        assert union == g.full
        assert [members(c)[0] for c in comps] == sorted(members(c)[0] for c in comps)
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(g.n))
        assert sorted(map(members, comps)) == sorted(sorted(c) for c in nx.connected_components(h))


def test_components_examples():
    assert connected_components(complete(3)) == [0b111]
    assert connected_components(Graph.from_edges(3, [])) == [1, 2, 4]
    assert connected_components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [0b11, 0b1100]


def test_neighborhood_examples():
    p3 = path(3)
    assert neighborhood(p3, vset([1])) == vset([0, 2])
    assert neighborhood(p3, p3.full) == 0
    assert neighborhood(cycle(4), vset([0]), "closed") == vset([0, 1, 3])


class TestTorso:
    def test_examples(self):
        t = torso(path(3), vset([0, 2]))
        assert t.edges() == [(0, 1)] and t.labels == (0, 2)
        g = wheel(5)
        assert torso(g, g.full) == g
        t = torso(cycle(6), vset([0, 3]))
        assert t.edges() == [(0, 1)] and t.labels == (0, 3)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10), st.data())
    def test_contains_induced_edges(self, g, data):
        x = vset(v for v in range(g.n) if data.draw(st.booleans()))
        t = torso(g, x)
        sub = induced_subgraph(g, x)
        for u, v in sub.edges():
            assert t.has_edge(u, v)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=10), st.data())
    def test_torso_definition(self, g, data):
        x = vset(v for v in range(g.n) if data.draw(st.booleans()))
        t = torso(g, x)
        local = {v: i for i, v in enumerate(members(x))}
        # u, v adjacent in the torso iff adjacent in G or joined by a path through G - X
        for u in members(x):
            for v in members(x):
                if u >= v:
                    continue
                inner = g.full & ~x
                through = any(
                    component_of(g.adj, w, inner) & g.adj[v] for w in members(g.adj[u] & inner)
                )
                assert t.has_edge(local[u], local[v]) == (g.has_edge(u, v) or through)

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_n=9), st.data())
    def test_absorbed_set_keeps_torso_induced(self, g, data):
        # if S inside X merges into component C of G - X without growing N(C),
        # the torso of X - S is the torso of X restricted to X - S
        x = vset(v for v in range(g.n) if data.draw(st.booleans()))
        comps = components_within(g.adj, g.full & ~x)
        if not comps or not x:
            return
        c = data.draw(st.sampled_from(comps))
        s = vset(v for v in members(x) if data.draw(st.booleans()))
        merged = component_of(g.adj, members(c)[0], (g.full & ~x) | s)
        nc = neighborhood(g, c)
        if merged != c | s or neighborhood(g, merged) & ~nc:
            return
        big = torso(g, x)
        keep = [i for i, v in enumerate(big.labels) if not s >> v & 1]
        assert induced_subgraph(big, vset(keep)).edges() == torso(g, x & ~s).edges()


def test_induced_subgraph_examples():
    assert induced_subgraph(complete(4), vset([0, 2, 3])) == complete(3)
    assert induced_subgraph(wheel(4), 0).n == 0
    assert induced_subgraph(cycle(5), vset([0, 1, 2])) == path(3)
    assert induced_subgraph(cycle(5), vset([1, 2, 4])).labels == (1, 2, 4)


def test_separation_validity():
    g = path(5)
    sep = Separation(vset([0, 1]), vset([2]), vset([3, 4]))
    assert sep.is_valid(g) and sep.is_sc_separation(g, 2, 1)
    assert not Separation(vset([0, 1, 2]), 0, vset([3, 4])).is_valid(g)
