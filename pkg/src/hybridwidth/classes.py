"""Hereditary graph classes: bipartite graphs and finite forbidden-induced-subgraph classes.

Membership is always decided per connected component, so a class given by
obstructions is in effect closed under disjoint union.  The elimination
distance and torso-treewidth only ever ask about connected members of H,
so this changes no parameter value, and it makes every witness a deletion
set (which the deletion-set pipelines rely on).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .graph import (
    Graph,
    components_within,
    iter_bits,
    lowest,
    parse_graph6,
    popcount,
)

BIPARTITE = "bipartite"
FORBIDDEN = "forbidden"


class OracleVariantError(TypeError):
    """An operation that needs a forbidden-induced-subgraph class got another variant."""


@dataclass(frozen=True)
class ClassOracle:
    variant: str
    name: str
    obstructions: tuple[Graph, ...] = ()

    def __post_init__(self):
        if self.variant == BIPARTITE:
            if self.obstructions:
                raise ValueError("the bipartite oracle takes no obstructions")
        elif self.variant == FORBIDDEN:
            if not self.obstructions:
                raise ValueError("a forbidden-induced-subgraph class needs at least one obstruction")
            if any(h.n == 0 for h in self.obstructions):
                raise ValueError("obstructions must have at least one vertex")
        else:
            raise ValueError(f"unknown oracle variant {self.variant!r}")

    @property
    def is_bipartite(self) -> bool:
        return self.variant == BIPARTITE

    def contains(self, g: Graph, mask: int | None = None) -> bool:
        """Whether every component of ``g[mask]`` belongs to the class."""
        if mask is None:
            mask = g.full
        return contains_mask(self, g.adj, mask)

    def __str__(self) -> str:
        return self.name


def bipartite_oracle() -> ClassOracle:
    return ClassOracle(BIPARTITE, "bip")


def forbidden_oracle(name: str, obstructions: Sequence[Graph]) -> ClassOracle:
    return ClassOracle(FORBIDDEN, name, tuple(obstructions))


# ---------------------------------------------------------------------------
# bipartiteness


def two_coloring(adj: Sequence[int], mask: int) -> dict[int, int] | None:
    """BFS 2-coloring of ``G[mask]``; each component's minimum vertex gets color 1."""
    color: dict[int, int] = {}
    for comp in components_within(adj, mask):
        root = lowest(comp)
        color[root] = 1
        layer = 1 << root
        seen = layer
        c = 1
        while layer:
            nxt = 0
            for v in iter_bits(layer):
                nxt |= adj[v]
            nxt &= mask
            c = 3 - c
            clash = nxt & layer
            if clash:
                return None
            nxt &= ~seen
            for v in iter_bits(nxt):
                color[v] = c
            seen |= nxt
            layer = nxt
        # same-layer edges were caught above; edges between layers i and i+2 cannot exist in BFS
    return color


def is_bipartite(g: Graph) -> dict[int, int] | None:
    """A proper 2-coloring ``{vertex: 1 | 2}`` of ``g``, or ``None`` if there is an odd cycle."""
    return two_coloring(g.adj, g.full)


def is_bipartite_mask(adj: Sequence[int], mask: int) -> bool:
    return two_coloring(adj, mask) is not None


# ---------------------------------------------------------------------------
# induced subgraph search


def _find_embedding(h: Graph, adj: Sequence[int], mask: int) -> tuple[int, ...] | None:
    """Lexicographically least induced embedding of ``h`` into ``G[mask]``."""
    k = h.n
    if k > popcount(mask):
        return None
    hdeg = [popcount(x) for x in h.adj]
    gdeg = {v: popcount(adj[v] & mask) for v in iter_bits(mask)}
    image: list[int] = []
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        for v in iter_bits(mask & ~used):
            if gdeg[v] < hdeg[i]:
                continue
            ok = True
            for j in range(i):
                if bool(h.adj[i] >> j & 1) != bool(adj[v] >> image[j] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image.append(v)
            used |= 1 << v
            if extend(i + 1):
                return True
            image.pop()
            used &= ~(1 << v)
        return False

    return tuple(image) if extend(0) else None


def find_forbidden_induced(oracle: ClassOracle, g: Graph, mask: int | None = None):
    """Least-index obstruction occurring as an induced subgraph of ``g[mask]``.

    Returns ``(index, embedding)`` where ``embedding[i]`` is the image of
    obstruction vertex ``i``, the lexicographically least such tuple; or
    ``None`` when no obstruction occurs.
    """
    if oracle.variant != FORBIDDEN:
        raise OracleVariantError(f"{oracle.name} is not a forbidden-induced-subgraph class")
    if mask is None:
        mask = g.full
    for idx, h in enumerate(oracle.obstructions):
        emb = _find_embedding(h, g.adj, mask)
        if emb is not None:
            return idx, emb
    return None


def find_obstruction(oracle: ClassOracle, g: Graph, mask: int | None = None):
    """Like :func:`find_forbidden_induced` but searched one component at a time.

    Components are scanned by ascending minimum vertex and the first hit is
    returned, so disconnected obstructions never straddle two components.
    """
    if oracle.variant != FORBIDDEN:
        raise OracleVariantError(f"{oracle.name} is not a forbidden-induced-subgraph class")
    if mask is None:
        mask = g.full
    for comp in components_within(g.adj, mask):
        hit = find_forbidden_induced(oracle, g, comp)
        if hit is not None:
            return hit
    return None


def contains_mask(oracle: ClassOracle, adj: Sequence[int], mask: int) -> bool:
    if oracle.variant == BIPARTITE:
        return two_coloring(adj, mask) is not None
    for comp in components_within(adj, mask):
        for h in oracle.obstructions:
            if _find_embedding(h, adj, comp) is not None:
                return False
    return True


def in_class(oracle: ClassOracle, g: Graph) -> bool:
    return oracle.contains(g)


# ---------------------------------------------------------------------------
# presets


def _g(n: int, edges) -> Graph:
    return Graph.from_edges(n, edges)


def _star(leaves: int) -> Graph:
    return _g(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _cones(d: int) -> list[Graph]:
    """Every graph on d+2 vertices having a vertex adjacent to all others, up to isomorphism."""
    import networkx as nx

    if d + 1 > 7:
        raise ValueError("maxdeg presets are available for d <= 6")
    bases = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == d + 1]
    out = []
    for base in bases:
        # apex is vertex 0, so the star (edgeless base) comes first
        edges = [(0, i + 1) for i in range(d + 1)]
        edges += [(u + 1, v + 1) for u, v in base.edges()]
        out.append(_g(d + 2, edges))
    out.sort(key=lambda h: h.m)
    return out


def triangle_free() -> ClassOracle:
    return forbidden_oracle("triangle-free", [_g(3, [(0, 1), (1, 2), (0, 2)])])


def claw_free() -> ClassOracle:
    return forbidden_oracle("claw-free", [_star(3)])


def max_degree(d: int) -> ClassOracle:
    """Graphs of maximum degree at most ``d``.

    A vertex of degree d+1 together with its neighbors induces a cone over
    some graph on d+1 vertices, so the obstruction list holds all such cones
    (the star K1,d+1 alone would miss e.g. K4 for d=2).
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    return forbidden_oracle(f"maxdeg:{d}", _cones(d))


def split() -> ClassOracle:
    two_k2 = _g(4, [(0, 1), (2, 3)])
    c4 = _g(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    c5 = _g(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    return forbidden_oracle("split", [two_k2, c4, c5])


def cograph() -> ClassOracle:
    return forbidden_oracle("cograph", [_g(4, [(0, 1), (1, 2), (2, 3)])])


def cliques() -> ClassOracle:
    # a connected graph is a clique iff it has no induced P3
    return forbidden_oracle("cliques", [_g(3, [(0, 1), (1, 2)])])


def load_obstructions(path: str | Path, name: str | None = None) -> ClassOracle:
    """Read an obstruction file: one graph6 string per line, ``#`` starts a comment."""
    graphs = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            graphs.append(parse_graph6(line))
    return forbidden_oracle(name or f"file:{path}", graphs)


def resolve_class(spec: str) -> ClassOracle:
    """Map a class spec such as ``bip``, ``maxdeg:3`` or ``file:obs.g6`` to an oracle."""
    simple = {
        "bip": bipartite_oracle,
        "bipartite": bipartite_oracle,
        "triangle-free": triangle_free,
        "claw-free": claw_free,
        "split": split,
        "cograph": cograph,
        "cliques": cliques,
        "clique": cliques,
    }
    if spec in simple:
        return simple[spec]()
    if spec.startswith("maxdeg:"):
        try:
            d = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad degree bound in {spec!r}") from None
        return max_degree(d)
    if spec.startswith("file:"):
        return load_obstructions(spec.split(":", 1)[1])
    raise ValueError(f"unknown class {spec!r}")
