"""Witness sets for H-elimination distance (``ed``) and H-treewidth (``tw``).

A witness of quality ``k`` is a set ``X`` such that every component of
``G - X`` lies in H and the torso of ``X`` has treedepth at most ``k``
(``ed``) or treewidth at most ``k - 1`` (``tw``).  The empty torso has
treewidth -1, so ``X = {}`` is a ``tw`` witness for ``k = 0`` exactly when
``G`` is in H.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import product

from .classes import ClassOracle, contains_mask
from .graph import (
    Graph,
    SizeCapError,
    components_within,
    encode_graph6,
    iter_bits,
    members,
    neighbors_of,
    popcount,
    subsets_of,
    torso,
)
from .structure import SEPARATION_CAP, connected_sets, find_separation
from .width import (
    DEFAULT_CAP,
    treedepth_atmost,
    treedepth_exact,
    treewidth_atmost,
    treewidth_exact,
)

log = logging.getLogger(__name__)

KINDS = ("ed", "tw")


class WitnessInputError(ValueError):
    pass


class NotDeletionSetError(WitnessInputError):
    """``Y`` handed to the extractor leaves a component outside H."""


class DeletionSetTooLargeError(WitnessInputError):
    """``Y`` is larger than ``s + k``."""


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind must be 'ed' or 'tw', not {kind!r}")


@dataclass(frozen=True)
class SolverParams:
    k: int
    s: int
    c: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.s < 1:
            raise ValueError("s must be at least 1")
        if self.c < self.k:
            raise ValueError("c must be at least k")


@dataclass
class Witness:
    x: int
    kind: str
    k: int
    value: int
    torso_graph: Graph
    component_certs: list[int]
    labels: tuple[int, ...] = ()

    def vertices(self) -> list[int]:
        if self.labels:
            return [self.labels[v] for v in iter_bits(self.x)]
        return members(self.x)

    def to_dict(self, g: Graph) -> dict:
        note1 = note1_holds(g, self.x, self.kind, self.value)
        return {
            "kind": self.kind,
            "k": self.k,
            "value": self.value,
            "x": g.relabel(self.x),
            "torso": {"graph6": encode_graph6(self.torso_graph)},
            "components": [{"vertices": g.relabel(c), "in_class": True} for c in self.component_certs],
            "checks": {"note1": note1, "torso_param": self.value},
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), sort_keys=True)


def torso_value(g: Graph, x: int, kind: str, cap: int = DEFAULT_CAP) -> int:
    t = torso(g, x)
    if kind == "ed":
        return treedepth_exact(t, cap)[0]
    return treewidth_exact(t, cap)[0]


def note1_holds(g: Graph, x: int, kind: str, value: int) -> bool:
    """Every component of ``G - X`` has at most ``value`` (``ed``) or ``value + 1`` (``tw``) neighbors."""
    bound = value if kind == "ed" else value + 1
    for comp in components_within(g.adj, g.full & ~x):
        if popcount(neighbors_of(g.adj, comp) & ~comp) > bound:
            return False
    return True


def verify_witness(g: Graph, x: int, k: int, kind: str, oracle: ClassOracle, cap: int = DEFAULT_CAP) -> bool:
    """Check that ``x`` is a witness of depth ``<= k`` (``ed``) or width ``<= k - 1`` (``tw``)."""
    _check_kind(kind)
    if x & ~g.full:
        raise ValueError("x contains non-vertices")
    if not contains_mask(oracle, g.adj, g.full & ~x):
        return False
    t = torso(g, x)
    if kind == "ed":
        return treedepth_atmost(t, k, cap)
    return treewidth_atmost(t, k - 1, cap)


def make_witness(g: Graph, x: int, kind: str, k: int, oracle: ClassOracle, cap: int = DEFAULT_CAP) -> Witness:
    rest = g.full & ~x
    comps = components_within(g.adj, rest)
    if not contains_mask(oracle, g.adj, rest):
        raise ValueError("x leaves a component outside the class")
    return Witness(
        x=x,
        kind=kind,
        k=k,
        value=torso_value(g, x, kind, cap),
        torso_graph=torso(g, x),
        component_certs=comps,
        labels=g.labels,
    )


def check_witness(g: Graph, w: Witness, oracle: ClassOracle) -> list[str]:
    """Independent re-verification of a returned witness; lists every failed check."""
    problems = []
    if not verify_witness(g, w.x, w.k, w.kind, oracle):
        problems.append("verify_witness rejects x")
    if w.value != torso_value(g, w.x, w.kind):
        problems.append("recorded value differs from the torso parameter")
    if not note1_holds(g, w.x, w.kind, w.value):
        problems.append("a component of G - X has too many neighbors")
    comps = components_within(g.adj, g.full & ~w.x)
    if sorted(comps) != sorted(w.component_certs):
        problems.append("component certificates do not match G - X")
    for comp in comps:
        if not contains_mask(oracle, g.adj, comp):
            problems.append(f"component {members(comp)} is not in the class")
    return problems


# ---------------------------------------------------------------------------
# extraction from a deletion set


def validate_hypotheses(g: Graph, p: SolverParams, cap: int = SEPARATION_CAP) -> bool | None:
    """Check ``tw(G) > s + k`` and ``(s, c)``-unbreakability; ``None`` when ``g`` is too big to check."""
    if g.n > cap:
        log.warning("graph has %d vertices; unbreakability and width hypotheses not verified", g.n)
        return None
    ok = True
    if treewidth_atmost(g, p.s + p.k, cap):
        log.warning("tw(G) <= s + k = %d; extraction is not guaranteed complete", p.s + p.k)
        ok = False
    if find_separation(g, p.s, p.c, cap) is not None:
        log.warning("G has an (%d, %d)-separation; extraction is not guaranteed complete", p.s, p.c)
        ok = False
    return ok


def extract_witness(
    g: Graph,
    y: int,
    p: SolverParams,
    kind: str,
    oracle: ClassOracle,
    check_hypotheses: bool = True,
) -> Witness | None:
    """A witness ``X`` containing the deletion set ``y``, if one exists.

    For each ``B`` inside ``y`` with at most ``k`` vertices (the part of ``y``
    next to the large component) and each choice of a small connected set
    around every other vertex of ``y``, the neighborhoods of those sets plus
    ``y`` form ``D``.  When ``G - D`` has a single component ``C`` of size at
    least ``s`` and fewer than ``s`` vertices lie outside ``N[C]``, every
    ``D + Q`` with ``Q`` outside ``N[C]`` is tested, smallest ``Q`` first.
    """
    _check_kind(kind)
    full = g.full
    if not contains_mask(oracle, g.adj, full & ~y):
        raise NotDeletionSetError("G - Y has a component outside the class")
    if popcount(y) > p.s + p.k:
        raise DeletionSetTooLargeError(f"|Y| = {popcount(y)} exceeds s + k = {p.s + p.k}")
    if check_hypotheses:
        validate_hypotheses(g, p)

    adj = g.adj
    choices = {v: connected_sets(g, v, p.s - 1, p.k) for v in iter_bits(y)}
    tried: set[int] = set()
    for b in subsets_of(y, max_size=p.k):
        rest = members(y & ~b)
        for tup in product(*(choices[v] for v in rest)):
            d = y
            for piece in tup:
                d |= neighbors_of(adj, piece) & ~piece
            if d in tried:
                continue
            tried.add(d)
            large = [c for c in components_within(adj, full & ~d) if popcount(c) >= p.s]
            if len(large) != 1:
                continue
            outside = full & ~neighbors_of(adj, large[0])
            if popcount(outside) >= p.s:
                continue
            for q in subsets_of(outside):
                x = d | q
                if verify_witness(g, x, p.k, kind, oracle):
                    return make_witness(g, x, kind, p.k, oracle)
    return None


# ---------------------------------------------------------------------------
# brute-force oracles


HHDEPTH_CAP = 14
TORSO_PARAM_CAP = 12


def brute_force_hhdepth(g: Graph, oracle: ClassOracle, cap: int = HHDEPTH_CAP) -> int:
    """H-elimination distance straight from its recursive definition."""
    if g.n > cap:
        raise SizeCapError("brute_force_hhdepth", g.n, cap)
    adj = g.adj
    memo: dict[int, int] = {}

    def ed(s: int) -> int:
        hit = memo.get(s)
        if hit is not None:
            return hit
        comps = components_within(adj, s)
        if len(comps) > 1:
            val = max(ed(c) for c in comps)
        elif not s or contains_mask(oracle, adj, s):
            val = 0
        else:
            val = 1 + min(ed(s & ~(1 << v)) for v in iter_bits(s))
        memo[s] = val
        return val

    return ed(g.full)


def _torso_search(g: Graph, oracle: ClassOracle, kind: str, k: int | None, cap: int):
    """Scan all ``X`` in canonical order; return the best ``(value, X)``, or the first ``X`` within ``k``."""
    _check_kind(kind)
    if g.n > cap:
        raise SizeCapError("brute_force_torso_param", g.n, cap)
    full = g.full
    floor = 0 if kind == "ed" else -1
    best, best_x = None, None
    for x in subsets_of(full):
        if not contains_mask(oracle, g.adj, full & ~x):
            continue
        t = torso(g, x)
        if k is not None:
            ok = treedepth_atmost(t, k) if kind == "ed" else treewidth_atmost(t, k - 1)
            if ok:
                return None, x
            continue
        if best is not None:
            limit = best - 1
            ok = treedepth_atmost(t, limit) if kind == "ed" else treewidth_atmost(t, limit)
            if not ok:
                continue
        val = treedepth_exact(t)[0] if kind == "ed" else treewidth_exact(t)[0]
        best, best_x = val, x
        # a non-empty X has torso value >= 1 (ed) or >= 0 (tw)
        if best <= floor + 1 and x:
            break
        if best == floor:
            break
    return best, best_x


def brute_force_torso_param(g: Graph, oracle: ClassOracle, kind: str, cap: int = TORSO_PARAM_CAP) -> int:
    """min over X with every component of G - X in H of td(torso) (ed) or tw(torso) (tw)."""
    return _torso_search(g, oracle, kind, None, cap)[0]


def brute_force_witness(
    g: Graph, k: int, kind: str, oracle: ClassOracle, cap: int = TORSO_PARAM_CAP
) -> Witness | None:
    """The first witness of quality ``k`` in canonical subset order, by exhaustive search."""
    _, x = _torso_search(g, oracle, kind, k, cap)
    return None if x is None else make_witness(g, x, kind, k, oracle)


def all_witnesses(g: Graph, k: int, kind: str, oracle: ClassOracle, cap: int = TORSO_PARAM_CAP) -> list[int]:
    if g.n > cap:
        raise SizeCapError("all_witnesses", g.n, cap)
    return [x for x in subsets_of(g.full) if verify_witness(g, x, k, kind, oracle)]


@dataclass
class SolverStats:
    """Which branch each solver call took; fed by the pipelines when passed in."""

    branches: list[str] = field(default_factory=list)

    def record(self, branch: str) -> None:
        self.branches.append(branch)

    @property
    def last(self) -> str | None:
        return self.branches[-1] if self.branches else None

    def count(self, branch: str) -> int:
        return self.branches.count(branch)
