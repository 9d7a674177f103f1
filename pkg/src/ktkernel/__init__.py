"""Polynomial kernel and exact solvers for K_t-free edge deletion."""

from .graph import (
    Graph,
    GraphParseError,
    edge_set_of,
    enumerate_t_cliques,
    parse_graph,
    serialize_graph,
)
from .hitting_set import (
    HittingSetInstance,
    SetFamily,
    Sunflower,
    brute_force_hitting_set,
    find_sunflower,
    is_hitting_set,
)
from .kernel import (
    Decision,
    KernelInvariantError,
    KernelResult,
    KernelTrace,
    apply_size_rule,
    apply_sunflower_rule,
    build_family,
    compute_link_family,
    kernelize,
    reconstruct_graph,
)
from .rng import SplitMix64, gnp
from .solver import DeletionInstance, Verdict, exact_solve, verify_equivalence

__all__ = [
    "Decision", "DeletionInstance", "Graph", "GraphParseError", "HittingSetInstance",
    "KernelInvariantError", "KernelResult", "KernelTrace", "SetFamily", "SplitMix64",
    "Sunflower", "Verdict", "apply_size_rule", "apply_sunflower_rule",
    "brute_force_hitting_set", "build_family", "compute_link_family", "edge_set_of",
    "enumerate_t_cliques", "exact_solve", "find_sunflower", "gnp", "is_hitting_set",
    "kernelize", "parse_graph", "reconstruct_graph", "serialize_graph", "verify_equivalence",
]
