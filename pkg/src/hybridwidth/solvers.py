"""Decision solvers for H-elimination distance and H-treewidth.

Both pipelines first split on the treewidth of the input.  At most ``s + k``
(or when the graph is not ``(s, c)``-unbreakable, which the deletion-set
machinery needs) the exhaustive witness search answers the question.
Otherwise every witness is small and leaves one large component, and
candidate deletion sets are fed to :func:`extract_witness`:

* finite obstruction sets: all minimal deletion sets of size ``<= s + k - 1``;
* bipartite graphs: OCTs contained in some witness, obtained in two rounds
  (a partitioned OCT aligned with the large component, then OCTs inside
  the witness found through the flip/keep separator correspondence).
"""

from __future__ import annotations

import logging
from itertools import product

from .classes import ClassOracle, FORBIDDEN, OracleVariantError, bipartite_oracle, two_coloring
from .graph import Graph, SizeCapError, members, neighbors_of, popcount, subsets_of
from .oct import PartitionedOct, is_oct, min_oct, three_partitions, two_partitions
from .structure import SEPARATION_CAP, connected_sets, enum_minimal_deletion_sets, find_separation
from .width import DEFAULT_CAP, treewidth_atmost
from .witness import (
    TORSO_PARAM_CAP,
    SolverParams,
    SolverStats,
    Witness,
    _check_kind,
    brute_force_witness,
    extract_witness,
)

log = logging.getLogger(__name__)

BRUTE_FORCE = "brute-force"
CLAIMS = "claims"


def _open_nbhd(adj, piece: int) -> int:
    return neighbors_of(adj, piece) & ~piece


def weakly_consistent_octs(g: Graph, p: SolverParams) -> list[PartitionedOct]:
    """Partitioned OCTs, one of which lines up with the large component of any witness.

    Starts from a minimum OCT ``W`` (at most ``s + k - 1`` vertices) and, for
    each split ``(W_L, W_I, W_R)`` and each choice of a small connected set
    around every ``W_R`` vertex, swaps ``W_R`` for those sets' neighborhoods.
    Choices whose neighborhoods touch ``W_L`` are skipped, since the output
    pair must stay disjoint.
    """
    w = min_oct(g, cap=p.s + p.k - 1)
    if w is None:
        return []
    adj = g.adj
    choices = {v: connected_sets(g, v, p.s - 1, p.k) for v in members(w)}
    out: list[PartitionedOct] = []
    seen: set[tuple[int, int]] = set()
    for w_l, w_i, w_r in three_partitions(w):
        for tup in product(*(choices[v] for v in members(w_r))):
            grown = 0
            for piece in tup:
                grown |= _open_nbhd(adj, piece)
            if grown & w_l:
                continue
            if not is_oct(g, w_l | w_i | grown):
                continue
            key = (w_l, w_i | grown)
            if key not in seen:
                seen.add(key)
                out.append(PartitionedOct(*key))
    return out


def strongly_consistent_octs(g: Graph, p: SolverParams, poct: PartitionedOct) -> list[int]:
    """OCTs derived from ``poct``, one of which lies inside any witness ``poct`` is aligned with."""
    w = poct.w
    if popcount(w) > p.s + p.k - 1:
        return []
    adj = g.adj
    full = g.full
    color = two_coloring(adj, full & ~w)
    if color is None:
        raise ValueError("poct is not an odd cycle transversal")
    ones = sum(1 << v for v, c in color.items() if c == 1)
    twos = (full & ~w) & ~ones
    cache: dict[int, list[int]] = {}

    def choices(v: int) -> list[int]:
        if v not in cache:
            cache[v] = connected_sets(g, v, p.s - 1, 2 * p.k)
        return cache[v]

    out: list[int] = []
    seen: set[int] = set()
    for w1, w2 in two_partitions(poct.w_l):
        b1 = neighbors_of(adj, w2) & ~w2 & ~w
        b2 = neighbors_of(adj, w1) & ~w1 & ~w
        flip = (b1 & twos) | (b2 & ones)
        keep = (b1 & ones) | (b2 & twos)
        for q in (flip, keep):
            if popcount(q) > p.s + p.k:
                continue
            for d in subsets_of(q, max_size=p.k):
                rest = members(q & ~d)
                for tup in product(*(choices(v) for v in rest)):
                    cand = w | d
                    for piece in tup:
                        cand |= _open_nbhd(adj, piece)
                    cand &= ~poct.w_l
                    if cand not in seen and is_oct(g, cand):
                        seen.add(cand)
                        out.append(cand)
    return out


def _breakable(g: Graph, p: SolverParams) -> bool | None:
    if g.n > SEPARATION_CAP:
        log.warning("n = %d exceeds %d; assuming (%d, %d)-unbreakability unverified", g.n, SEPARATION_CAP, p.s, p.c)
        return None
    return find_separation(g, p.s, p.c) is not None


def _low_width_route(g: Graph, p: SolverParams, stats: SolverStats | None) -> str:
    if g.n > DEFAULT_CAP:
        raise SizeCapError("treewidth test", g.n, DEFAULT_CAP)
    if treewidth_atmost(g, p.s + p.k):
        reason = BRUTE_FORCE
    elif _breakable(g, p):
        reason = BRUTE_FORCE
    else:
        reason = CLAIMS
    if stats is not None:
        stats.record(reason)
    return reason


def solve_bip(
    g: Graph,
    k: int,
    s: int,
    kind: str,
    stats: SolverStats | None = None,
    brute_cap: int = TORSO_PARAM_CAP,
) -> Witness | None:
    """Witness that bip-ed(G) <= k (``ed``) or bip-tw(G) <= k - 1 (``tw``), or ``None``."""
    _check_kind(kind)
    oracle = bipartite_oracle()
    p = SolverParams(k=k, s=s, c=2 * k)
    if _low_width_route(g, p, stats) == BRUTE_FORCE:
        return brute_force_witness(g, k, kind, oracle, cap=brute_cap)
    tried: set[int] = set()
    for poct in weakly_consistent_octs(g, p):
        for u in strongly_consistent_octs(g, p, poct):
            if u in tried or popcount(u) > p.s + p.k:
                continue
            tried.add(u)
            w = extract_witness(g, u, p, kind, oracle, check_hypotheses=False)
            if w is not None:
                return w
    return None


def solve_finite_obstruction(
    g: Graph,
    k: int,
    s: int,
    kind: str,
    oracle: ClassOracle,
    stats: SolverStats | None = None,
    brute_cap: int = TORSO_PARAM_CAP,
) -> Witness | None:
    """Same decision for a class given by finitely many forbidden induced subgraphs."""
    _check_kind(kind)
    if oracle.variant != FORBIDDEN:
        raise OracleVariantError(f"{oracle.name} is not a forbidden-induced-subgraph class")
    p = SolverParams(k=k, s=s, c=k)
    if _low_width_route(g, p, stats) == BRUTE_FORCE:
        return brute_force_witness(g, k, kind, oracle, cap=brute_cap)
    for y in enum_minimal_deletion_sets(oracle, g, p.s + p.k - 1):
        w = extract_witness(g, y, p, kind, oracle, check_hypotheses=False)
        if w is not None:
            return w
    return None


def solve(
    g: Graph,
    k: int,
    s: int,
    kind: str,
    oracle: ClassOracle,
    stats: SolverStats | None = None,
    brute_cap: int = TORSO_PARAM_CAP,
) -> Witness | None:
    if oracle.is_bipartite:
        return solve_bip(g, k, s, kind, stats, brute_cap)
    return solve_finite_obstruction(g, k, s, kind, oracle, stats, brute_cap)

