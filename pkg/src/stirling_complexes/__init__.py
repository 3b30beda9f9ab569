"""Grouped Stirling complexes of simple graphs: cells, counts, connectivity,
and verifiable multi-robot motion plans."""

from .complexes import (
    Cell,
    ColorVector,
    ComplexSpec,
    EmptyComplexError,
    cell_sort_key,
    enumerate_cells,
    f_vector,
    format_cell,
    is_available,
    is_nonempty,
    is_nontrivial,
    is_valid_cell,
    max_dimension,
    occupancy,
    occupancy_difference,
    parse_cell,
    same_type,
    valid_parts,
)
from .counting import (
    count_valid_edge_tuples,
    two_one_cell_counts,
    uniform_cell_counts,
    wedge_count,
)
from .graphs import (
    EdgeListError,
    NoPathError,
    SimpleGraph,
    generate_named,
    is_connected,
    parse_edge_list,
    shortest_path,
)
from .planner import (
    HypothesisNotMetError,
    InvalidMoveError,
    Move,
    MovePlan,
    PlanningError,
    PlanVerification,
    apply_move,
    format_plan,
    is_valid_move,
    leapfrog,
    parse_plan,
    plan,
    plan_bfs,
    same_type_plan,
    snap,
    swap_colors,
    swap_third,
    verify_plan,
)
from .skeleton import (
    SkeletonGraph,
    boundary_endpoints,
    build_one_skeleton,
    component_labels,
    connected_components,
    euler_characteristic,
)

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "ColorVector",
    "ComplexSpec",
    "EdgeListError",
    "EmptyComplexError",
    "HypothesisNotMetError",
    "InvalidMoveError",
    "Move",
    "MovePlan",
    "NoPathError",
    "PlanVerification",
    "PlanningError",
    "SimpleGraph",
    "SkeletonGraph",
    "apply_move",
    "boundary_endpoints",
    "build_one_skeleton",
    "cell_sort_key",
    "component_labels",
    "connected_components",
    "count_valid_edge_tuples",
    "enumerate_cells",
    "euler_characteristic",
    "f_vector",
    "format_cell",
    "format_plan",
    "generate_named",
    "is_available",
    "is_connected",
    "is_nonempty",
    "is_nontrivial",
    "is_valid_cell",
    "is_valid_move",
    "leapfrog",
    "max_dimension",
    "occupancy",
    "occupancy_difference",
    "parse_cell",
    "parse_edge_list",
    "parse_plan",
    "plan",
    "plan_bfs",
    "same_type",
    "same_type_plan",
    "shortest_path",
    "snap",
    "swap_colors",
    "swap_third",
    "two_one_cell_counts",
    "uniform_cell_counts",
    "valid_parts",
    "verify_plan",
    "wedge_count",
]
