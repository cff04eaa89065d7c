"""Deterministic graph families for tests and the ``corpus`` command."""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(m: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..m."""
    rim = [(i, i % m + 1) for i in range(1, m + 1)]
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)] + rim)


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` plus every edge between them."""
    edges = list(disjoint_union(a, b).edges())
    edges += [(u, a.n + v) for u in range(a.n) for v in range(b.n)]
    return Graph.from_edges(a.n + b.n, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def clique_appendage(clique: int, p: int, q: int, attach: int | None = None, seed: int = 0) -> Graph:
    """A clique ``K_clique`` with a bipartite ``K_{p,q}`` hanging off it.

    Each appendage vertex is joined to ``attach`` clique vertices chosen with
    the seeded RNG (all of them when ``attach`` is ``None``).
    """
    rng = random.Random(seed)
    base = disjoint_union(complete(clique), complete_bipartite(p, q))
    edges = list(base.edges())
    for v in range(clique, clique + p + q):
        targets = range(clique) if attach is None else rng.sample(range(clique), attach)
        edges.extend((t, v) for t in targets)
    return Graph.from_edges(base.n, edges)


def small_graphs(max_n: int = 7) -> Iterator[Graph]:
    """Every graph on at most ``max_n <= 7`` vertices up to isomorphism (the graph atlas)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the atlas covers graphs with at most 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n > max_n:
            break
        yield Graph.from_edges(n, h.edges())


def random_graphs(count: int, n_min: int, n_max: int, seed: int, p_range=(0.15, 0.7)) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.uniform(*p_range)
        yield gnp(n, p, rng.randrange(2**31))


FAMILIES = {
    "path": (path, [int]),
    "cycle": (cycle, [int]),
    "complete": (complete, [int]),
    "clique": (complete, [int]),
    "star": (star, [int]),
    "wheel": (wheel, [int]),
    "grid": (grid, [int, int]),
    "petersen": (petersen, []),
    "bipartite": (complete_bipartite, [int, int]),
    "gnp": (gnp, [int, float]),
    "clique-appendage": (clique_appendage, [int, int, int]),
}


def build(family: str, args: list[str], seed: int | None = None) -> Graph:
    """Construct a named family member from string arguments (CLI helper)."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    fn, types = FAMILIES[family]
    if len(args) != len(types):
        raise ValueError(f"{family} takes {len(types)} argument(s), got {len(args)}")
    values = [t(a) for t, a in zip(types, args)]
    if family == "gnp":
        if seed is None:
            raise ValueError("gnp needs --seed")
        return gnp(*values, seed=seed)
    if family == "clique-appendage" and seed is not None:
        return clique_appendage(*values, seed=seed)
    return fn(*values)
