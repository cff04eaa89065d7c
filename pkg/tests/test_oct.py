import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybridwidth.classes import two_coloring
from hybridwidth.corpus import complete, complete_bipartite, cycle, grid, path, petersen, random_graphs, wheel
from hybridwidth.graph import Graph, members, popcount, vset
from hybridwidth.oct import (
    SplitOctError,
    ImproperColoringError,
    NotAnOctError,
    NotIndependentError,
    OverlapError,
    PartitionedOct,
    check_recolorable,
    claim1_sets,
    min_oct,
    min_vertex_separator,
)

from .test_graph import graphs


def nx_graph(g: Graph, keep=None) -> nx.Graph:
    h = nx.Graph()
    verts = range(g.n) if keep is None else keep
    h.add_nodes_from(verts)
    h.add_edges_from((u, v) for u, v in g.edges() if u in h and v in h)
    return h


def brute_oct_size(g: Graph) -> int:
    for size in range(g.n + 1):
        for w in combinations(range(g.n), size):
            if nx.is_bipartite(nx_graph(g, set(range(g.n)) - set(w))):
                return size
    raise AssertionError("unreachable")


def brute_separator_size(g: Graph, a: set, r: set) -> int:
    for size in range(g.n + 1):
        for x in combinations(range(g.n), size):
            h = nx_graph(g, set(range(g.n)) - set(x))
            if not any(nx.has_path(h, s, t) for s in a - set(x) for t in r - set(x)):
                return size
    raise AssertionError("unreachable")


def separates(g: Graph, x: int, a: int, r: int) -> bool:
    h = nx_graph(g, set(members(g.full & ~x)))
    return not any(nx.has_path(h, s, t) for s in members(a & ~x) for t in members(r & ~x))


C5_COLORING = {1: 1, 2: 2, 3: 1, 4: 2}


class TestFlipKeepSets:
    def test_examples(self):
        inst = claim1_sets(cycle(5), vset([0]), 0, 0, C5_COLORING)
        assert (inst.a_side, inst.r_side) == (vset([1]), vset([4]))
        inst = claim1_sets(cycle(5), 0, 0, vset([0]), C5_COLORING)
        assert (inst.a_side, inst.r_side) == (0, 0)
        inst = claim1_sets(cycle(4), 0, 0, vset([0]), {1: 1, 2: 2, 3: 1})
        assert (inst.a_side, inst.r_side) == (0, 0)

    def test_errors(self):
        with pytest.raises(NotAnOctError):
            claim1_sets(cycle(5), 0, 0, 0, {v: 1 + v % 2 for v in range(5)})
        with pytest.raises(NotIndependentError):
            claim1_sets(complete(3), vset([0, 1]), 0, 0, {2: 1})
        with pytest.raises(ImproperColoringError):
            claim1_sets(cycle(5), vset([0]), 0, 0, {1: 1, 2: 1, 3: 2, 4: 1})
        with pytest.raises(SplitOctError):
            claim1_sets(cycle(5), vset([0]), vset([0]), 0, C5_COLORING)


class TestRecolorable:
    def test_examples(self):
        assert check_recolorable(cycle(5), vset([0]), 0, 0, vset([2]))
        assert not check_recolorable(cycle(5), vset([0]), 0, 0, 0)
        assert check_recolorable(complete_bipartite(2, 3), 0, 0, 0, 0)

    def test_overlap(self):
        with pytest.raises(OverlapError):
            check_recolorable(cycle(5), vset([0]), 0, 0, vset([0]))

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=8), st.data())
    def test_equivalence_on_random_instances(self, g, data):
        # recolorability holds exactly when X separates A from R in G - W
        w = min_oct(g)
        if popcount(w) > 3:
            return
        labels = [data.draw(st.integers(0, 2)) for _ in members(w)]
        parts = [vset(v for v, lab in zip(members(w), labels) if lab == i) for i in range(3)]
        wi, wl1, wl2 = parts
        if not (_independent(g, wl1) and _independent(g, wl2)):
            return
        color = two_coloring(g.adj, g.full & ~w)
        inst = claim1_sets(g, wl1, wl2, wi, color)
        x = vset(v for v in members(g.full & ~w) if data.draw(st.booleans()))
        induced = Graph.from_edges(g.n, [(u, v) for u, v in g.edges() if not (w >> u & 1 or w >> v & 1)])
        assert check_recolorable(g, wl1, wl2, wi, x) == separates(induced, x, inst.a_side, inst.r_side)


def _independent(g: Graph, s: int) -> bool:
    return all(g.adj[v] & s == 0 for v in members(s))


class TestSeparator:
    def test_examples(self):
        p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        sep = min_vertex_separator(p4, vset([0]), vset([3]), 2)
        assert popcount(sep) == 1 and separates(p4, sep, vset([0]), vset([3]))
        # terminals may be cut: the source-side choice is the endpoint itself
        assert sep == vset([0])
        assert min_vertex_separator(complete(2), vset([0]), vset([1]), 1) == vset([0])
        assert min_vertex_separator(path(3), vset([0, 1]), vset([1, 2]), 1) == vset([1])

    def test_cap(self):
        assert min_vertex_separator(complete(4), vset([0, 1]), vset([2, 3]), 1) is None
        assert popcount(min_vertex_separator(complete(4), vset([0, 1]), vset([2, 3]), 2)) == 2

    def test_against_brute_force(self):
        rng = random.Random(11)
        for g in random_graphs(150, 2, 8, seed=11):
            a = vset(v for v in range(g.n) if rng.random() < 0.3)
            r = vset(v for v in range(g.n) if rng.random() < 0.3)
            sep = min_vertex_separator(g, a, r)
            assert separates(g, sep, a, r)
            assert popcount(sep) == brute_separator_size(g, set(members(a)), set(members(r)))


class TestMinOct:
    @pytest.mark.parametrize(
        "g, size",
        [(cycle(5), 1), (complete(5), 3), (petersen(), 3), (grid(3, 3), 0), (wheel(5), 2), (wheel(6), 1)],
    )
    def test_named(self, g, size):
        w = min_oct(g)
        assert popcount(w) == size
        assert nx.is_bipartite(nx_graph(g, set(members(g.full & ~w))))

    def test_cap(self):
        assert min_oct(complete(5), cap=2) is None
        assert popcount(min_oct(complete(5), cap=3)) == 3

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=9))
    def test_against_brute_force(self, g):
        w = min_oct(g)
        assert nx.is_bipartite(nx_graph(g, set(members(g.full & ~w))))
        assert popcount(w) == brute_oct_size(g)


def test_partitioned_oct_disjoint():
    with pytest.raises(ValueError):
        PartitionedOct(vset([1]), vset([1, 2]))
    assert PartitionedOct(vset([1]), vset([2])).w == vset([1, 2])
