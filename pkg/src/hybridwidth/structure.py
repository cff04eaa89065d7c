"""Enumeration and separation primitives used by the witness solvers."""

from __future__ import annotations

from dataclasses import dataclass

from .classes import ClassOracle, OracleVariantError, FORBIDDEN, find_obstruction
from .graph import (
    Graph,
    Separation,
    SizeCapError,
    components_within,
    iter_bits,
    lowest,
    neighbors_of,
    popcount,
    subset_key,
    subsets_of,
    vset,
)

SEPARATION_CAP = 20


@dataclass(frozen=True)
class ConnectedSetQuery:
    """Connected sets ``B`` with ``anchor in B``, ``|B| <= size_bound + 1``, ``|N(B)| <= nbr_bound``."""

    anchor: int
    size_bound: int
    nbr_bound: int

    def __post_init__(self):
        if self.size_bound < 0 or self.nbr_bound < 0:
            raise ValueError("bounds must be non-negative")


def enum_connected_sets(g: Graph, q: ConnectedSetQuery) -> list[int]:
    """All connected vertex sets matching ``q``, each once, in canonical order.

    Branches on the least undecided neighbor of the current set: either it
    joins the set or it is fixed as a neighborhood vertex.  A branch dies once
    the set is too large or more than ``nbr_bound`` vertices are fixed outside.
    """
    if not 0 <= q.anchor < g.n:
        raise ValueError(f"anchor {q.anchor} is not a vertex")
    adj = g.adj
    max_size = q.size_bound + 1
    f = q.nbr_bound
    found = []

    def grow(inside: int, size: int, outside: int, n_out: int) -> None:
        frontier = neighbors_of(adj, inside) & ~inside & ~outside
        if not frontier:
            found.append(inside)
            return
        if size == max_size:
            # no more room: every remaining neighbor lands in N(B)
            if n_out + popcount(frontier) <= f:
                found.append(inside)
            return
        u = lowest(frontier)
        grow(inside | (1 << u), size + 1, outside, n_out)
        if n_out < f:
            grow(inside, size, outside | (1 << u), n_out + 1)

    grow(1 << q.anchor, 1, 0, 0)
    found.sort(key=subset_key)
    return found


def connected_sets(g: Graph, anchor: int, size_bound: int, nbr_bound: int) -> list[int]:
    return enum_connected_sets(g, ConnectedSetQuery(anchor, size_bound, nbr_bound))


def enum_minimal_deletion_sets(oracle: ClassOracle, g: Graph, bound: int) -> list[int]:
    """Every inclusion-minimal deletion set of size at most ``bound``, canonical order.

    Branches on the vertices of the least obstruction found in ``G - Y``,
    then drops non-minimal results.
    """
    if oracle.variant != FORBIDDEN:
        raise OracleVariantError(f"{oracle.name} is not a forbidden-induced-subgraph class")
    full = g.full
    leaves: set[int] = set()

    def branch(y: int, budget: int) -> None:
        if any(leaf & y == leaf for leaf in leaves):
            return
        hit = find_obstruction(oracle, g, full & ~y)
        if hit is None:
            leaves.add(y)
            return
        if budget == 0:
            return
        for v in _hitting_vertices(g, full & ~y, hit[1]):
            branch(y | (1 << v), budget - 1)

    if bound >= 0:
        branch(0, bound)

    def minimal(y: int) -> bool:
        return all(
            not oracle.contains(g, full & ~(y & ~(1 << v))) for v in iter_bits(y)
        )

    return sorted((y for y in leaves if minimal(y)), key=subset_key)


def _hitting_vertices(g: Graph, alive: int, embedding: tuple[int, ...]) -> list[int]:
    """Vertices one of which every deletion set must remove to kill ``embedding``.

    For a connected obstruction this is the embedding itself.  A disconnected
    one (such as 2K2) can also be neutralised by cutting its pieces apart, so
    shortest paths joining the pieces inside ``alive`` are added.
    """
    adj = g.adj
    span = vset(embedding)
    extra = []
    while True:
        pieces = components_within(adj, span)
        if len(pieces) == 1:
            break
        # BFS from the first piece to the nearest other piece of span
        start = pieces[0]
        prev = {v: -1 for v in iter_bits(start)}
        layer = start
        target = -1
        while layer and target < 0:
            nxt = []
            for v in iter_bits(layer):
                for u in iter_bits(adj[v] & alive):
                    if u not in prev:
                        prev[u] = v
                        nxt.append(u)
                        if span >> u & 1:
                            target = u
                            break
                if target >= 0:
                    break
            layer = vset(nxt)
        if target < 0:
            raise ValueError("obstruction embedding spans two components")
        v = prev[target]
        while not start >> v & 1:
            extra.append(v)
            span |= 1 << v
            v = prev[v]
    return list(embedding) + sorted(extra)


def _split_components(sizes: list[int], s: int, total: int) -> list[int] | None:
    """Indices of a group of components whose size lies in [s, total - s]."""
    reach = {0: []}
    for i, size in enumerate(sizes):
        for acc, picked in list(reach.items()):
            nxt = acc + size
            if nxt not in reach:
                reach[nxt] = picked + [i]
    for acc in sorted(reach):
        if s <= acc <= total - s:
            return reach[acc]
    return None


def find_separation(g: Graph, s: int, c: int, cap: int = SEPARATION_CAP) -> Separation | None:
    """An ``(s, c)``-separation of ``g`` or ``None``; exhaustive over separators of size <= c."""
    if g.n > cap:
        raise SizeCapError("find_separation", g.n, cap)
    full = g.full
    for sep in subsets_of(full, max_size=c):
        rest = full & ~sep
        total = popcount(rest)
        if total < 2 * s:
            continue
        comps = components_within(g.adj, rest)
        group = _split_components([popcount(x) for x in comps], s, total)
        if group is None:
            continue
        x_side = vset([])
        for i in group:
            x_side |= comps[i]
        return Separation(x_side, sep, rest & ~x_side)
    return None


def is_unbreakable(g: Graph, s: int, c: int, cap: int = SEPARATION_CAP) -> bool:
    return find_separation(g, s, c, cap) is None
