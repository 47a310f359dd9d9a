"""burnkit: graph-burning simulation, exact solvers, reduction gadgets,
the vertex-cover-to-burning pipeline, and regularity lifting."""

from .burning import (
    BurningSchedule,
    BurningSequence,
    InvalidSequenceError,
    frontier_burn_times,
    is_burning_sequence,
    last_step_set,
    read_sequence,
    simulate,
    uniquely_burned_set,
    write_sequence,
)
from .gadgets import (
    GadgetHandle,
    make_BT,
    make_BTP,
    make_C,
    make_C_witness,
    make_P,
    make_T,
    make_Tail,
    make_Y,
)
from .graph import (
    DistanceMap,
    Graph,
    bfs_distances,
    degree_histogram,
    is_connected,
    is_regular,
    read_graph,
    write_graph,
)
from .lift import LiftedGraph, build_Hd, lift_sequence, project_sequence, project_vertex
from .reduction import (
    AuditReport,
    ReductionInstance,
    ReductionParams,
    audit_sequence,
    build_H,
    choose_params,
    double_subdivide,
    expected_vertex_count,
    vc_to_witness,
    witness_to_vc,
)
from .solvers import (
    SolveResult,
    burning_number_exact,
    burning_number_naive,
    path_cycle_burning_number,
    path_cycle_witness,
    vertex_cover_exact,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BurningSchedule",
    "BurningSequence",
    "DistanceMap",
    "GadgetHandle",
    "Graph",
    "InvalidSequenceError",
    "LiftedGraph",
    "ReductionInstance",
    "ReductionParams",
    "SolveResult",
    "audit_sequence",
    "bfs_distances",
    "build_H",
    "build_Hd",
    "burning_number_exact",
    "burning_number_naive",
    "choose_params",
    "degree_histogram",
    "double_subdivide",
    "expected_vertex_count",
    "frontier_burn_times",
    "is_burning_sequence",
    "is_connected",
    "is_regular",
    "last_step_set",
    "lift_sequence",
    "make_BT",
    "make_BTP",
    "make_C",
    "make_C_witness",
    "make_P",
    "make_T",
    "make_Tail",
    "make_Y",
    "path_cycle_burning_number",
    "path_cycle_witness",
    "project_sequence",
    "project_vertex",
    "read_graph",
    "read_sequence",
    "simulate",
    "uniquely_burned_set",
    "vc_to_witness",
    "vertex_cover_exact",
    "witness_to_vc",
    "write_graph",
    "write_sequence",
]
