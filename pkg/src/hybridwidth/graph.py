"""Simple undirected graphs over dense vertex ids, with bitmask vertex sets.

A vertex set is a plain ``int`` whose bit ``v`` is set when vertex ``v`` is a
member.  Every algorithm in the package works on these masks; use
:func:`vset` and :func:`members` to convert from and to ordinary collections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphParseError(ValueError):
    """Base class for malformed graph input."""


class Graph6HeaderError(GraphParseError):
    pass


class Graph6TruncatedError(GraphParseError):
    pass


class Graph6TrailingDataError(GraphParseError):
    pass


class EdgeListError(GraphParseError):
    pass


class SizeCapError(ValueError):
    """An exact routine was asked to handle a graph above its size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


# ---------------------------------------------------------------------------
# vertex set helpers


def vset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def subset_key(mask: int) -> tuple[int, list[int]]:
    """Canonical order on vertex sets: by size, then lexicographically."""
    return popcount(mask), members(mask)


def subsets_of(mask: int, max_size: int | None = None, min_size: int = 0) -> Iterator[int]:
    """All subsets of ``mask`` in canonical order (size, then lexicographic)."""
    from itertools import combinations

    elems = members(mask)
    top = len(elems) if max_size is None else min(max_size, len(elems))
    for size in range(min_size, top + 1):
        for combo in combinations(elems, size):
            yield vset(combo)


# ---------------------------------------------------------------------------
# the graph type


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``.  ``labels`` records, for
    graphs produced by :func:`induced_subgraph` or :func:`torso`, the vertex
    id each local vertex had in the parent graph.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on edge {{{u}, {v}}}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u}, {v}}} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def relabel(self, mask: int) -> list[int]:
        """Translate a local vertex set into the ids recorded in ``labels``."""
        return [self.labels[v] for v in iter_bits(mask)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (optionally prefixed by ``>>graph6<<``)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6HeaderError("graphs with more than 62 vertices are not supported")
    if not 63 <= head <= 125:
        raise Graph6HeaderError(f"invalid graph6 size byte {s[0]!r}")
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    for ch in body:
        if not 63 <= ord(ch) <= 126:
            raise Graph6HeaderError(f"invalid graph6 data byte {ch!r}")
    if len(body) < nbytes:
        raise Graph6TruncatedError(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6TrailingDataError(f"{len(body) - nbytes} unexpected bytes after graph6 data")

    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 encoding supports at most 62 vertices")
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        val = 0
        for b in bits[start:start + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# DIMACS edge lists


def parse_edge_list(text: str) -> Graph:
    """Parse ``p edge n m`` followed by ``m`` lines ``e u v`` (1-based).

    ``c`` lines are comments.  Duplicate edges collapse to one edge.
    """
    n = m = None
    edges = []
    seen_lines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise EdgeListError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise EdgeListError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise EdgeListError(f"line {lineno}: non-integer vertex or edge count") from None
            if n < 0 or m < 0:
                raise EdgeListError(f"line {lineno}: negative count")
        elif parts[0] == "e":
            if n is None:
                raise EdgeListError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise EdgeListError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise EdgeListError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise EdgeListError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise EdgeListError(f"line {lineno}: self-loop on vertex {u}")
            edges.append((u - 1, v - 1))
            seen_lines += 1
        else:
            raise EdgeListError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise EdgeListError("missing 'p edge' line")
    if seen_lines != m:
        raise EdgeListError(f"header declares {m} edges, found {seen_lines}")
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural primitives


def neighbors_of(adj: Sequence[int], mask: int) -> int:
    """Closed neighborhood union N[mask] (without the final subtraction)."""
    out = mask
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def component_of(adj: Sequence[int], start: int, allowed: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


def components_within(adj: Sequence[int], allowed: int) -> list[int]:
    """Components of the subgraph induced by ``allowed``, by ascending minimum vertex."""
    out = []
    rest = allowed
    while rest:
        comp = component_of(adj, lowest(rest), allowed)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected_within(adj: Sequence[int], mask: int) -> bool:
    return mask == 0 or component_of(adj, lowest(mask), mask) == mask


def connected_components(g: Graph) -> list[int]:
    return components_within(g.adj, g.full)


def neighborhood(g: Graph, s: int, mode: str = "open") -> int:
    closed = neighbors_of(g.adj, s)
    if mode == "closed":
        return closed
    if mode == "open":
        return closed & ~s
    raise ValueError(f"mode must be 'open' or 'closed', not {mode!r}")


def induced_subgraph(g: Graph, s: int) -> Graph:
    """G[S], re-indexed to ``0..|S|-1`` in increasing order of original id."""
    verts = members(s)
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(vset(index[u] for u in iter_bits(g.adj[v] & s)))
    return Graph(len(verts), tuple(adj), tuple(g.labels[v] for v in verts))


def torso_adjacency(adj: Sequence[int], full: int, x: int) -> dict[int, int]:
    """Torso edges on ``x`` as a dict vertex -> neighbor mask (ids unchanged)."""
    tadj = {v: adj[v] & x for v in iter_bits(x)}
    for comp in components_within(adj, full & ~x):
        boundary = neighbors_of(adj, comp) & x
        for v in iter_bits(boundary):
            tadj[v] |= boundary & ~(1 << v)
    return tadj


def torso(g: Graph, x: int) -> Graph:
    """Torso of ``x``: clique every component's neighborhood, then keep only ``x``.

    The result is re-indexed like :func:`induced_subgraph`; ``labels`` maps
    local ids back to ids of ``g``'s labelling.
    """
    tadj = torso_adjacency(g.adj, g.full, x)
    verts = members(x)
    index = {v: i for i, v in enumerate(verts)}
    adj = tuple(vset(index[u] for u in iter_bits(tadj[v])) for v in verts)
    return Graph(len(verts), adj, tuple(g.labels[v] for v in verts))


def is_clique_within(adj: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if (adj[v] | (1 << v)) & mask != mask:
            return False
    return True


@dataclass(frozen=True)
class Separation:
    """A partition ``(x_side, separator, y_side)`` of V(G) with no x-y edge."""

    x_side: int
    separator: int
    y_side: int

    def is_valid(self, g: Graph) -> bool:
        parts = (self.x_side, self.separator, self.y_side)
        if self.x_side & self.separator or self.x_side & self.y_side or self.separator & self.y_side:
            return False
        if parts[0] | parts[1] | parts[2] != g.full:
            return False
        return neighbors_of(g.adj, self.x_side) & self.y_side == 0

    def is_sc_separation(self, g: Graph, s: int, c: int) -> bool:
        return (
            self.is_valid(g)
            and popcount(self.separator) <= c
            and popcount(self.x_side) >= s
            and popcount(self.y_side) >= s
        )
