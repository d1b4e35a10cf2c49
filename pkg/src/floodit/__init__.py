"""Flood-filling game engine, polynomial solvers, and hardness-board workbench."""

from .connection import ConnectionTable, compute_table
from .core import (
    Board,
    BudgetExceeded,
    ColouredGraph,
    DisconnectedGraph,
    FloodError,
    FloodState,
    IllegalMove,
    Move,
    Region,
    RegionPartition,
    apply_fixed_move,
    apply_free_move,
    apply_sequence,
    board_from_json,
    board_to_graph,
    board_to_json,
    contract_monochromatic,
    graph_from_json,
    graph_to_json,
    is_linked,
    min_region_path_count,
    random_board,
)
from .oracle import SolveResult, link_exact, solve_fixed_exact, solve_free_exact
from .reduction import (
    ReductionBoard,
    ReductionReport,
    ScsInstance,
    build_fixed_board,
    build_free_board,
    end_to_end_region_count,
    flooding_sequence,
    scs_exact,
    verify_reduction,
)
from .service import GameService, GameSession, Hint, ServiceConfig
from .solvers import ApproxResult, TwoColourResult, approx_board, solve_path, solve_two_colour

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "Board",
    "BudgetExceeded",
    "ColouredGraph",
    "ConnectionTable",
    "DisconnectedGraph",
    "FloodError",
    "FloodState",
    "GameService",
    "GameSession",
    "Hint",
    "IllegalMove",
    "Move",
    "ReductionBoard",
    "ReductionReport",
    "Region",
    "RegionPartition",
    "ScsInstance",
    "ServiceConfig",
    "SolveResult",
    "TwoColourResult",
    "apply_fixed_move",
    "apply_free_move",
    "apply_sequence",
    "approx_board",
    "board_from_json",
    "board_to_graph",
    "board_to_json",
    "build_fixed_board",
    "build_free_board",
    "compute_table",
    "contract_monochromatic",
    "end_to_end_region_count",
    "flooding_sequence",
    "graph_from_json",
    "graph_to_json",
    "is_linked",
    "link_exact",
    "min_region_path_count",
    "random_board",
    "scs_exact",
    "solve_fixed_exact",
    "solve_free_exact",
    "solve_path",
    "solve_two_colour",
    "verify_reduction",
]
