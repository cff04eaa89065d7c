"""Odd cycle transversals via separators.

Fix an OCT ``W`` split into a kept part ``W_I`` and two independent sets
``W_L1``, ``W_L2`` that must receive colors 1 and 2.  Given a proper coloring
``c`` of ``G - W``, the vertices next to ``W_L1`` colored 1 and next to
``W_L2`` colored 2 must flip color (set ``A``); those next to ``W_L1``
colored 2 and next to ``W_L2`` colored 1 must keep theirs (set ``R``).  A set
``X`` outside ``W`` makes the constrained coloring possible exactly when it
separates ``A`` from ``R`` in ``G - W``.  Minimum OCT by iterative compression
is this correspondence plus a min-cut, tried for every 3-way split of an
oversized solution.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .classes import two_coloring
from .graph import Graph, iter_bits, members, neighbors_of, popcount, vset


class SplitOctError(ValueError):
    pass


class NotAnOctError(SplitOctError):
    pass


class NotIndependentError(SplitOctError):
    pass


class ImproperColoringError(SplitOctError):
    pass


class OverlapError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionedOct:
    """An odd cycle transversal split into ``w_l`` and ``w_i``."""

    w_l: int
    w_i: int

    def __post_init__(self):
        if self.w_l & self.w_i:
            raise ValueError("w_l and w_i must be disjoint")

    @property
    def w(self) -> int:
        return self.w_l | self.w_i

    def __repr__(self) -> str:
        return f"PartitionedOct(w_l={members(self.w_l)}, w_i={members(self.w_i)})"


@dataclass(frozen=True)
class SeparatorInstance:
    a_side: int
    r_side: int
    ambient: int  # vertex mask of G - W


def is_oct(g: Graph, w: int) -> bool:
    return two_coloring(g.adj, g.full & ~w) is not None


def three_partitions(mask: int) -> Iterator[tuple[int, int, int]]:
    """All ordered partitions of ``mask`` into three parts, in a fixed canonical order."""
    elems = members(mask)
    for labels in product(range(3), repeat=len(elems)):
        parts = [0, 0, 0]
        for v, lab in zip(elems, labels):
            parts[lab] |= 1 << v
        yield parts[0], parts[1], parts[2]


def two_partitions(mask: int) -> Iterator[tuple[int, int]]:
    elems = members(mask)
    for labels in product(range(2), repeat=len(elems)):
        first = vset(v for v, lab in zip(elems, labels) if lab == 0)
        yield first, mask & ~first


def _is_independent(adj: Sequence[int], mask: int) -> bool:
    return all(adj[v] & mask == 0 for v in iter_bits(mask))


def _flip_keep_masks(adj, alive, wl1, wl2, wi, color) -> tuple[int, int]:
    w = wl1 | wl2 | wi
    ambient = alive & ~w
    n1 = neighbors_of(adj, wl1) & ~wl1 & alive & ~wi
    n2 = neighbors_of(adj, wl2) & ~wl2 & alive & ~wi
    ones = vset(v for v in iter_bits(ambient) if color[v] == 1)
    twos = ambient & ~ones
    a = (n1 & ones) | (n2 & twos)
    r = (n1 & twos) | (n2 & ones)
    return a, r


def claim1_sets(g: Graph, w_l1: int, w_l2: int, w_i: int, c: dict[int, int]) -> SeparatorInstance:
    """The flip set ``A`` and keep set ``R`` for a split OCT and a coloring of ``G - W``."""
    if w_l1 & w_l2 or w_l1 & w_i or w_l2 & w_i:
        raise SplitOctError("w_l1, w_l2 and w_i must be pairwise disjoint")
    w = w_l1 | w_l2 | w_i
    if not is_oct(g, w):
        raise NotAnOctError("w_l1 + w_l2 + w_i is not an odd cycle transversal")
    if not _is_independent(g.adj, w_l1) or not _is_independent(g.adj, w_l2):
        raise NotIndependentError("w_l1 and w_l2 must be independent sets")
    ambient = g.full & ~w
    for v in iter_bits(ambient):
        if c.get(v) not in (1, 2):
            raise ImproperColoringError(f"vertex {v} has no color in {{1, 2}}")
        for u in iter_bits(g.adj[v] & ambient):
            if c.get(u) == c[v]:
                raise ImproperColoringError(f"edge {{{u}, {v}}} is monochromatic")
    a, r = _flip_keep_masks(g.adj, g.full, w_l1, w_l2, w_i, c)
    return SeparatorInstance(a, r, ambient)


def _seeded_coloring(adj: Sequence[int], alive: int, seeds: dict[int, int]) -> bool:
    color = dict(seeds)
    queue = deque(seeds)
    pending = alive & ~vset(seeds)
    while True:
        while queue:
            v = queue.popleft()
            for u in iter_bits(adj[v] & alive):
                if u in color:
                    if color[u] == color[v]:
                        return False
                else:
                    color[u] = 3 - color[v]
                    pending &= ~(1 << u)
                    queue.append(u)
        if not pending:
            return True
        v = (pending & -pending).bit_length() - 1
        color[v] = 1
        pending &= ~(1 << v)
        queue.append(v)


def check_recolorable(g: Graph, w_l1: int, w_l2: int, w_i: int, x: int) -> bool:
    """Whether ``(G - W_I) - X`` has a proper 2-coloring with ``W_L1`` on 1 and ``W_L2`` on 2."""
    if x & (w_l1 | w_l2 | w_i):
        raise OverlapError("X must avoid w_l1, w_l2 and w_i")
    alive = g.full & ~w_i & ~x
    seeds = {v: 1 for v in iter_bits(w_l1)}
    seeds.update({v: 2 for v in iter_bits(w_l2)})
    return _seeded_coloring(g.adj, alive, seeds)


# ---------------------------------------------------------------------------
# vertex min-cut


def _min_separator(adj: Sequence[int], alive: int, a: int, r: int, cap: int) -> int | None:
    """Minimum vertex set inside ``alive`` meeting every a-r path (terminals deletable)."""
    a &= alive
    r &= alive
    if not a or not r:
        return 0
    verts = members(alive)
    source, sink = -1, -2
    inf = len(verts) + 1
    # node (v, 0) is v_in, (v, 1) is v_out
    res: dict = {source: {}, sink: {}}
    for v in verts:
        res[(v, 0)] = {}
        res[(v, 1)] = {}

    def arc(x, y, capacity):
        res[x][y] = res[x].get(y, 0) + capacity
        res[y].setdefault(x, 0)

    for v in verts:
        arc((v, 0), (v, 1), 1)
        for u in iter_bits(adj[v] & alive):
            arc((v, 1), (u, 0), inf)
    for v in iter_bits(a):
        arc(source, (v, 0), inf)
    for v in iter_bits(r):
        arc((v, 1), sink, inf)

    flow = 0
    while True:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            x = queue.popleft()
            for y, capacity in res[x].items():
                if capacity > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            break
        y = sink
        while prev[y] is not None:
            x = prev[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
        if flow > cap:
            return None
    reach = set(prev)
    return vset(v for v in verts if (v, 0) in reach and (v, 1) not in reach)


def min_vertex_separator(g: Graph, a: int, r: int, cap: int | None = None) -> int | None:
    """A minimum ``(A, R)``-separator of ``g`` if its size is at most ``cap``.

    The separator may contain vertices of ``A`` and ``R``.  Among minimum
    separators the one closest to ``A`` (source side of the residual graph)
    is returned.
    """
    if cap is None:
        cap = g.n
    return _min_separator(g.adj, g.full, a, r, cap)


# ---------------------------------------------------------------------------
# iterative compression


def _compress(adj: Sequence[int], alive: int, z: int, budget: int) -> int | None:
    """An OCT of ``G[alive]`` of size <= budget, given the OCT ``z``; ``None`` if none exists."""
    color = two_coloring(adj, alive & ~z)
    ambient = alive & ~z
    for kept, wl1, wl2 in three_partitions(z):
        room = budget - popcount(kept)
        if room < 0:
            continue
        if not _is_independent(adj, wl1) or not _is_independent(adj, wl2):
            continue
        a, r = _flip_keep_masks(adj, alive, wl1, wl2, kept, color)
        sep = _min_separator(adj, ambient, a, r, room)
        if sep is not None:
            return kept | sep
    return None


def min_oct(g: Graph, cap: int | None = None) -> int | None:
    """A minimum odd cycle transversal of ``g``, or ``None`` if it is larger than ``cap``."""
    if cap is None:
        cap = g.n
    adj = g.adj
    sol = 0
    alive = 0
    for v in range(g.n):
        alive |= 1 << v
        if two_coloring(adj, alive & ~sol) is not None:
            continue
        z = sol | (1 << v)
        smaller = _compress(adj, alive, z, popcount(z) - 1)
        sol = z if smaller is None else smaller
        if popcount(sol) > cap:
            return None
    return sol
