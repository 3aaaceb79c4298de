"""Exact computation of truncated metric dimensions of graphs.

Distances beyond k+1 are indistinguishable under truncation at k; a vertex
set (or [0,1]-valued weighting) resolves a graph when every vertex pair is
distinguished by some chosen vertex (by total mass >= 1).  This package
computes the minimum size and the minimum total mass exactly, by rational
branch-and-bound and rational LP with certified witnesses, alongside
closed-form oracles, structural characterizations, and a verification
harness that replays the known formulas at desk scale.
"""

from .graph import (
    DistanceMatrix,
    Graph,
    GraphInputError,
    ball,
    bfs_apsp,
    diameter,
    from_edge_list,
    from_edge_list_text,
    is_connected,
    join,
    read_edge_list,
    shell,
    to_edge_list_text,
    truncated_distance,
    write_edge_list,
)
from .rational import Rational, fmt, parse_rat, rat
from .resolve import (
    ConstraintSystem,
    check_resolving_function,
    check_resolving_set,
    constraint_system,
    r_k_pair,
    r_k_pair_neighborhood_form,
    twin_classes,
)
from .solvers import (
    FractionalWitness,
    IntegerWitness,
    SizeLimitError,
    WitnessError,
    dim_f,
    dim_k_exact,
    dim_kf,
    greedy_upper_bound,
    simplex_min_exact,
)
from .formulas import FormulaValue
from .vertex_enum import enumerate_lp_vertices, lp_vertex_minimum
from .harness import VerificationReport, run_suite, suite_names

__all__ = [
    "ConstraintSystem",
    "DistanceMatrix",
    "FormulaValue",
    "FractionalWitness",
    "Graph",
    "GraphInputError",
    "IntegerWitness",
    "Rational",
    "SizeLimitError",
    "VerificationReport",
    "WitnessError",
    "ball",
    "bfs_apsp",
    "check_resolving_function",
    "check_resolving_set",
    "constraint_system",
    "diameter",
    "dim_f",
    "dim_k_exact",
    "dim_kf",
    "enumerate_lp_vertices",
    "fmt",
    "from_edge_list",
    "from_edge_list_text",
    "greedy_upper_bound",
    "is_connected",
    "join",
    "lp_vertex_minimum",
    "parse_rat",
    "r_k_pair",
    "r_k_pair_neighborhood_form",
    "rat",
    "read_edge_list",
    "run_suite",
    "shell",
    "simplex_min_exact",
    "suite_names",
    "to_edge_list_text",
    "truncated_distance",
    "twin_classes",
    "write_edge_list",
]
