"""Parity Hamiltonian cycle toolkit.

A parity Hamiltonian cycle (PHC) is a closed walk visiting every vertex
an odd number of times; edges may repeat. The toolkit decides existence,
constructs witnesses with bounded edge multiplicities (PHC_4 always,
PHC_3 on four-edge-connected graphs and on graph classes with universal
small subgraphs), handles S-odd walks and connected mod-4 factors,
builds the cubic-Hamiltonicity hardness gadget, and cross-checks
everything against exhaustive brute-force oracles at desk scale.
"""

from .classes import classify, is_c_geq_k_free, is_cubic, is_pk_free
from .certify import (
    Certificate,
    certify_edge,
    compose_certificates,
    connected_mod4_factor,
    dense_all_round,
    phc3_with_bridges,
)
from .construct import Decision, construct_phc4, construct_s_odd, decide_phc
from .errors import (
    BudgetExceededError,
    CertificationError,
    ContractViolationError,
    GraphFormatError,
    InfeasibleError,
    PhcError,
    PreconditionError,
)
from .factor import (
    ParityTarget,
    f_feasible,
    mod4_f_factor,
    phc3_4ec,
    reconnect,
    small_connected_factor,
)
from .gadget import GadgetMap, build_gadget, hc_from_phc, phc2_from_hc
from .graph import (
    Bipartition,
    EarDecomposition,
    Graph,
    OddCycle,
    bipartition_or_odd_cycle,
    bridges_and_components,
    ear_decomposition,
    edge_connectivity_at_least,
    is_connected,
    parse_graph,
)
from .oracle import all_round, bipartite_all_round, hamiltonian_cycle, phc_exists, solve_mod_d_factor
from .parity import (
    euler_realize,
    multiplicities,
    t_join,
    verify_mod_factor,
    verify_phc,
    verify_s_odd,
    visit_counts,
)
from .trees import TreePair, edge_disjoint_spanning_trees

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BudgetExceededError",
    "Certificate",
    "CertificationError",
    "ContractViolationError",
    "Decision",
    "EarDecomposition",
    "GadgetMap",
    "Graph",
    "GraphFormatError",
    "InfeasibleError",
    "OddCycle",
    "ParityTarget",
    "PhcError",
    "PreconditionError",
    "TreePair",
    "all_round",
    "bipartite_all_round",
    "bipartition_or_odd_cycle",
    "bridges_and_components",
    "build_gadget",
    "certify_edge",
    "classify",
    "compose_certificates",
    "connected_mod4_factor",
    "construct_phc4",
    "construct_s_odd",
    "decide_phc",
    "dense_all_round",
    "ear_decomposition",
    "edge_connectivity_at_least",
    "edge_disjoint_spanning_trees",
    "euler_realize",
    "f_feasible",
    "hamiltonian_cycle",
    "hc_from_phc",
    "is_c_geq_k_free",
    "is_connected",
    "is_cubic",
    "is_pk_free",
    "mod4_f_factor",
    "multiplicities",
    "parse_graph",
    "phc2_from_hc",
    "phc3_4ec",
    "phc3_with_bridges",
    "phc_exists",
    "reconnect",
    "small_connected_factor",
    "solve_mod_d_factor",
    "t_join",
    "verify_mod_factor",
    "verify_phc",
    "verify_s_odd",
    "visit_counts",
]
