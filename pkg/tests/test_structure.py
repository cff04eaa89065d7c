import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybridwidth.classes import ClassOracle, OracleVariantError, bipartite_oracle, claw_free, cograph, split, triangle_free
from hybridwidth.corpus import complete, cycle, path, random_graphs, small_graphs, star
from hybridwidth.graph import Graph, SizeCapError, members, subset_key, vset
from hybridwidth.structure import (
    ConnectedSetQuery,
    connected_sets,
    enum_connected_sets,
    enum_minimal_deletion_sets,
    find_separation,
    is_unbreakable,
)

from .test_graph import graphs


def nx_connected(g: Graph, s: set) -> bool:
    if not s:
        return False
    start = next(iter(s))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in s and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def filter_connected_sets(g: Graph, v: int, b: int, f: int) -> list[int]:
    out = []
    for mask in range(1 << g.n):
        s = set(members(mask))
        if v not in s or len(s) > b + 1 or not nx_connected(g, s):
            continue
        nbrs = {u for w in s for u in g.neighbors(w)} - s
        if len(nbrs) <= f:
            out.append(mask)
    return out


def as_sets(masks):
    return sorted(tuple(members(m)) for m in masks)


class TestConnectedSets:
    def test_examples(self):
        k13 = star(3)  # center 0
        assert as_sets(connected_sets(k13, 0, 1, 3)) == [(0,), (0, 1), (0, 2), (0, 3)]
        assert as_sets(connected_sets(complete(3), 0, 2, 3)) == [(0,), (0, 1), (0, 1, 2), (0, 2)]
        assert connected_sets(cycle(6), 2, 0, 2) == [1 << 2]

    def test_canonical_order(self):
        found = connected_sets(complete(4), 1, 3, 3)
        assert [len(members(m)) for m in found] == sorted(len(members(m)) for m in found)
        assert found[0] == 1 << 1

    def test_query_invariants(self):
        with pytest.raises(ValueError):
            ConnectedSetQuery(0, -1, 2)
        with pytest.raises(ValueError):
            connected_sets(path(3), 5, 1, 1)

    def test_equals_subset_filter_on_random_graphs(self):
        rng = random.Random(31)
        for g in random_graphs(60, 1, 10, seed=31):
            v = rng.randrange(g.n)
            b, f = rng.randint(0, 4), rng.randint(0, 4)
            assert connected_sets(g, v, b, f) == sorted(filter_connected_sets(g, v, b, f), key=subset_key)

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=12), st.data())
    def test_count_bound(self, g, data):
        if g.n == 0:
            return
        v = data.draw(st.integers(0, g.n - 1))
        b, f = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
        assert len(connected_sets(g, v, b, f)) <= b * f * comb(b + f, b)


def brute_minimal_deletion_sets(oracle, g: Graph, bound: int) -> list[int]:
    def ok(y):
        return oracle.contains(g, g.full & ~y)

    hits = [y for y in range(1 << g.n) if len(members(y)) <= bound and ok(y)]
    minimal = [y for y in hits if all(not ok(y & ~(1 << v)) for v in members(y))]
    return sorted(minimal, key=subset_key)


class TestMinimalDeletionSets:
    def test_examples(self):
        tf = triangle_free()
        assert as_sets(enum_minimal_deletion_sets(tf, complete(4), 2)) == [tuple(p) for p in combinations(range(4), 2)]
        assert enum_minimal_deletion_sets(tf, cycle(5), 2) == [0]
        assert enum_minimal_deletion_sets(tf, complete(4), 1) == []

    def test_rejects_bipartite(self):
        with pytest.raises(OracleVariantError):
            enum_minimal_deletion_sets(bipartite_oracle(), path(3), 1)

    @pytest.mark.parametrize("seed, oracle", list(enumerate([triangle_free(), claw_free(), split(), cograph()])),
                             ids=lambda o: getattr(o, "name", str(o)))
    def test_equals_brute_force(self, seed, oracle):
        for g in random_graphs(40, 1, 8, seed=seed):
            for bound in range(0, 4):
                assert enum_minimal_deletion_sets(oracle, g, bound) == brute_minimal_deletion_sets(oracle, g, bound)

    def test_disconnected_obstruction_cut_by_path(self):
        # 2K2 joined by a path: deleting the middle of the path is a minimal fix
        two_k2 = ClassOracle("forbidden", "no 2K2", (Graph.from_edges(4, [(0, 1), (2, 3)]),))
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        found = enum_minimal_deletion_sets(two_k2, g, 1)
        assert found == brute_minimal_deletion_sets(two_k2, g, 1)
        assert vset([2]) in found


def brute_has_separation(g: Graph, s: int, c: int) -> bool:
    for sep in range(1 << g.n):
        if len(members(sep)) > c:
            continue
        rest = [v for v in range(g.n) if not sep >> v & 1]
        for bits in range(1 << len(rest)):
            x = vset(rest[i] for i in range(len(rest)) if bits >> i & 1)
            y = vset(rest) & ~x
            if len(members(x)) < s or len(members(y)) < s:
                continue
            if all(g.adj[u] & y == 0 for u in members(x)):
                return True
    return False


class TestSeparations:
    def test_examples(self):
        assert find_separation(complete(5), 1, 1) is None
        sep = find_separation(path(9), 4, 1)
        assert sep.separator == vset([4])
        assert sorted([len(members(sep.x_side)), len(members(sep.y_side))]) == [4, 4]
        two_k4 = Graph.from_edges(7, [(a, b) for a in range(4) for b in range(a + 1, 4)]
                                  + [(a, b) for a in range(3, 7) for b in range(a + 1, 7)])
        sep = find_separation(two_k4, 3, 1)
        assert sep.separator == vset([3])
        assert is_unbreakable(complete(5), 1, 1)
        assert not is_unbreakable(path(9), 4, 1)
        assert not is_unbreakable(cycle(6), 2, 2)

    def test_cap(self):
        with pytest.raises(SizeCapError):
            find_separation(path(21), 2, 1)

    def test_against_brute_force(self):
        rng = random.Random(5)
        for g in random_graphs(120, 2, 8, seed=5):
            s, c = rng.randint(1, 3), rng.randint(0, 3)
            sep = find_separation(g, s, c)
            assert (sep is not None) == brute_has_separation(g, s, c)
            if sep is not None:
                assert sep.is_sc_separation(g, s, c)

    def test_all_small_graphs_one_setting(self):
        for g in small_graphs(6):
            sep = find_separation(g, 2, 1)
            assert (sep is not None) == brute_has_separation(g, 2, 1)
