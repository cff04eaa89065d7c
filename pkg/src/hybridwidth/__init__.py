"""Exact solvers for H-elimination distance and H-treewidth on small graphs."""

from .classes import (
    ClassOracle,
    bipartite_oracle,
    find_forbidden_induced,
    in_class,
    is_bipartite,
    resolve_class,
)
from .graph import (
    Graph,
    Separation,
    connected_components,
    induced_subgraph,
    members,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    encode_graph6,
    torso,
    vset,
)
from .oct import PartitionedOct, check_recolorable, claim1_sets, min_oct, min_vertex_separator
from .solvers import solve, solve_bip, solve_finite_obstruction, strongly_consistent_octs, weakly_consistent_octs
from .structure import (
    ConnectedSetQuery,
    enum_connected_sets,
    enum_minimal_deletion_sets,
    find_separation,
    is_unbreakable,
)
from .width import treedepth_atmost, treedepth_exact, treewidth_atmost, treewidth_exact
from .witness import (
    SolverParams,
    Witness,
    brute_force_hhdepth,
    brute_force_torso_param,
    extract_witness,
    verify_witness,
)

__version__ = "0.1.0"
