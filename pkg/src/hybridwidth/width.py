"""Exact treewidth and treedepth for small graphs, with certificates.

Treewidth is computed over elimination orderings: eliminating the set ``S``
first and then ``v`` creates a bag of size ``|Q(S, v)| + 1`` where ``Q(S, v)``
is the set of vertices outside ``S + v`` reachable from ``v`` through ``S``.
The search is a memoised subset DFS for the decision ``tw <= k``, run for
increasing ``k``; trying vertices in ascending order makes the first ordering
found the lexicographically least optimal one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Graph,
    SizeCapError,
    component_of,
    components_within,
    is_clique_within,
    iter_bits,
    lowest,
    members,
    neighbors_of,
    popcount,
)

DEFAULT_CAP = 20


@dataclass
class TreeDecomposition:
    parent: list[int]
    bags: list[int]

    @property
    def nodes(self) -> list[int]:
        return list(range(len(self.bags)))

    @property
    def width(self) -> int:
        return max((popcount(b) for b in self.bags), default=0) - 1

    def validate(self, g: Graph) -> list[str]:
        """Return the violated tree-decomposition conditions (empty when valid)."""
        problems = []
        m = len(self.bags)
        if len(self.parent) != m:
            return ["parent and bag lists differ in length"]
        roots = [t for t in range(m) if self.parent[t] < 0]
        if m and len(roots) != 1:
            problems.append(f"expected one root, found {len(roots)}")
        for t in range(m):
            seen, p = set(), t
            while p >= 0:
                if p in seen or p >= m:
                    problems.append(f"node {t} does not reach the root")
                    break
                seen.add(p)
                p = self.parent[p]
        for u, v in g.edges():
            pair = (1 << u) | (1 << v)
            if not any(b & pair == pair for b in self.bags):
                problems.append(f"edge {{{u}, {v}}} not covered")
        covered = 0
        for b in self.bags:
            covered |= b
        if covered != g.full:
            problems.append("bags do not cover every vertex")
        for v in range(g.n):
            holders = {t for t in range(m) if self.bags[t] >> v & 1}
            # connected subtree iff exactly one holder has its parent outside the set
            tops = [t for t in holders if self.parent[t] not in holders]
            if len(tops) > 1:
                problems.append(f"bags containing vertex {v} are not connected")
        return problems

    def to_json(self) -> str:
        return json.dumps(
            {
                "nodes": self.nodes,
                "parent": self.parent,
                "bags": [members(b) for b in self.bags],
                "width": self.width,
            }
        )


@dataclass
class EliminationForest:
    parent: list[int]

    @property
    def depth(self) -> int:
        best = 0
        for v in range(len(self.parent)):
            d, p = 0, v
            while p >= 0:
                d += 1
                p = self.parent[p]
            best = max(best, d)
        return best

    def ancestors(self, v: int) -> int:
        mask, p = 0, self.parent[v]
        while p >= 0:
            mask |= 1 << p
            p = self.parent[p]
        return mask

    def validate(self, g: Graph) -> list[str]:
        problems = []
        for u, v in g.edges():
            if not (self.ancestors(u) >> v & 1 or self.ancestors(v) >> u & 1):
                problems.append(f"edge {{{u}, {v}}} joins incomparable vertices")
        roots = [v for v in range(len(self.parent)) if self.parent[v] < 0]
        comps = components_within(g.adj, g.full)
        if len(roots) != len(comps):
            problems.append(f"{len(roots)} roots for {len(comps)} components")
        return problems


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise SizeCapError(what, g.n, cap)


# ---------------------------------------------------------------------------
# treewidth


def _q_size(adj: Sequence[int], eliminated: int, v: int) -> int:
    comp = component_of(adj, v, eliminated | (1 << v))
    return popcount(neighbors_of(adj, comp) & ~comp)


def _order_within(adj: Sequence[int], full: int, k: int) -> list[int] | None:
    """Lexicographically least elimination order of width <= k, or None."""
    failed: set[int] = set()
    order: list[int] = []

    def search(eliminated: int) -> bool:
        rest = full & ~eliminated
        if popcount(rest) <= k + 1:
            order.extend(iter_bits(rest))
            return True
        for v in iter_bits(rest):
            nxt = eliminated | (1 << v)
            if nxt in failed or _q_size(adj, eliminated, v) > k:
                continue
            order.append(v)
            if search(nxt):
                return True
            order.pop()
        failed.add(eliminated)
        return False

    return order if search(0) else None


def decomposition_from_order(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Tree decomposition induced by an elimination order (one bag per vertex)."""
    if g.n == 0:
        return TreeDecomposition([], [])
    pos = {v: i for i, v in enumerate(order)}
    fill = list(g.adj)
    bags, parent = [], []
    for i, v in enumerate(order):
        later = 0
        for u in iter_bits(fill[v]):
            if pos[u] > i:
                later |= 1 << u
        for u in iter_bits(later):
            fill[u] |= later & ~(1 << u)
        bags.append(later | (1 << v))
        parent.append(min((pos[u] for u in iter_bits(later)), default=-1))
    # join the per-component roots into one tree
    roots = [t for t in range(len(order)) if parent[t] < 0]
    for r in roots[:-1]:
        parent[r] = roots[-1]
    return TreeDecomposition(parent, bags)


def treewidth_order(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, list[int]]:
    _check_cap(g, cap, "treewidth_exact")
    if g.n == 0:
        return -1, []
    k = min(popcount(a) for a in g.adj)
    while True:
        order = _order_within(g.adj, g.full, k)
        if order is not None:
            return k, order
        k += 1


def treewidth_exact(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, TreeDecomposition]:
    """Exact treewidth and a decomposition of that width; the empty graph has width -1."""
    width, order = treewidth_order(g, cap)
    return width, decomposition_from_order(g, order)


def treewidth_atmost(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool:
    _check_cap(g, cap, "treewidth_atmost")
    if g.n == 0:
        return k >= -1
    if k < min(popcount(a) for a in g.adj):
        return False
    if k >= g.n - 1:
        return True
    return _order_within(g.adj, g.full, k) is not None


# ---------------------------------------------------------------------------
# treedepth


class _Treedepth:
    """Memoised treedepth of connected vertex subsets of one graph."""

    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.memo: dict[int, tuple[int, int]] = {}

    def connected(self, s: int) -> int:
        hit = self.memo.get(s)
        if hit is not None:
            return hit[0]
        size = popcount(s)
        if size == 1 or is_clique_within(self.adj, s):
            # any vertex works; take the least
            self.memo[s] = (size, lowest(s))
            return size
        best, root = size + 1, -1
        for v in iter_bits(s):
            rest = s & ~(1 << v)
            worst = 0
            for comp in components_within(self.adj, rest):
                if popcount(comp) <= worst:
                    continue
                worst = max(worst, self.connected(comp))
                if worst + 1 >= best:
                    break
            if worst + 1 < best:
                best, root = worst + 1, v
                if best == 2:  # a connected non-clique never does better
                    break
        self.memo[s] = (best, root)
        return best

    def of(self, s: int) -> int:
        return max((self.connected(c) for c in components_within(self.adj, s)), default=0)

    def forest(self, s: int, parent: list[int], above: int = -1) -> None:
        for comp in components_within(self.adj, s):
            self.connected(comp)
            root = self.memo[comp][1]
            parent[root] = above
            self.forest(comp & ~(1 << root), parent, root)


def treedepth_exact(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, EliminationForest]:
    """Exact treedepth (0 for the empty graph) and an optimal elimination forest."""
    _check_cap(g, cap, "treedepth_exact")
    solver = _Treedepth(g.adj)
    depth = solver.of(g.full)
    parent = [-1] * g.n
    solver.forest(g.full, parent)
    return depth, EliminationForest(parent)


def treedepth_value(adj: Sequence[int], mask: int) -> int:
    return _Treedepth(adj).of(mask)


def _td_atmost(adj: Sequence[int], s: int, k: int, memo: dict[int, int]) -> bool:
    """Decide td(G[s]) <= k for connected s; memo keeps the largest k known to fail."""
    size = popcount(s)
    if size <= k:
        return True
    if k <= 0 or memo.get(s, -1) >= k:
        return False
    if is_clique_within(adj, s):
        memo[s] = max(memo.get(s, -1), k)
        return False
    for v in iter_bits(s):
        if all(_td_atmost(adj, c, k - 1, memo) for c in components_within(adj, s & ~(1 << v))):
            return True
    memo[s] = max(memo.get(s, -1), k)
    return False


def treedepth_atmost(g: Graph, k: int, cap: int = DEFAULT_CAP) -> bool:
    _check_cap(g, cap, "treedepth_atmost")
    memo: dict[int, int] = {}
    return all(_td_atmost(g.adj, c, k, memo) for c in components_within(g.adj, g.full))
