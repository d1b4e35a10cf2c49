"""Command-line interface: solvers, link tables, reductions, service, boards."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .connection import compute_table
from .core import (
    BudgetExceeded,
    ColouredGraph,
    FloodError,
    FloodState,
    board_from_json,
    board_to_json,
    graph_from_json,
    random_board,
)
from .oracle import DEFAULT_BUDGET, SolveResult, solve_fixed_exact, solve_free_exact
from .reduction import ScsInstance, build_fixed_board, build_free_board, verify_reduction
from .solvers import approx_board


def _read_json(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _load_graph(data: dict) -> ColouredGraph:
    if "cells" in data:
        return FloodState.from_board(board_from_json(data)).graph
    return graph_from_json(data)


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _move_json(move) -> dict:
    return {"vertex": move.vertex, "colour": move.colour + 1}


def _solve_json(result: SolveResult) -> dict:
    return {
        "optimum": result.optimum,
        "witness": [_move_json(m) for m in result.witness],
        "target_colour": None if result.target_colour is None else result.target_colour + 1,
    }


def _cmd_solve(args) -> int:
    data = _read_json(args.input)
    target = None if args.target is None else args.target - 1
    if args.variant == "fixed":
        if "cells" in data:
            board = board_from_json(data)
            state = FloodState.from_board(board)
            result = solve_fixed_exact(state.graph, state.region_map[args.pivot], args.budget)
        else:
            result = solve_fixed_exact(graph_from_json(data), args.pivot, args.budget)
    else:
        result = solve_free_exact(_load_graph(data), target, args.budget)
    _emit(_solve_json(result))
    return 0


def _cmd_link(args) -> int:
    graph = _load_graph(_read_json(args.input))
    table = compute_table(graph)
    if args.all:
        pairs = [
            {"u": u, "v": v, "d": d + 1, "m": table.query_link(u, v, d)}
            for u in range(table.vertex_count)
            for v in range(u, table.vertex_count)
            for d in range(table.colour_count)
        ]
        _emit({"pairs": pairs})
        return 0
    if args.u is None or args.v is None:
        raise SystemExit("link needs --u and --v (or --all)")
    if args.d is None:
        value, _ = table.query_link_any(args.u, args.v)
    else:
        value = table.query_link(args.u, args.v, args.d - 1)
    _emit(value)
    return 0


def _cmd_approx(args) -> int:
    board = board_from_json(_read_json(args.input))
    result = approx_board(board)
    _emit({
        "lower": result.lower,
        "upper": result.upper,
        "witness": [_move_json(m) for m in result.witness],
    })
    return 0


def _parse_instance(data: dict) -> tuple[ScsInstance, str]:
    instance = ScsInstance(tuple(data["strings"]), int(data["l"]))
    return instance, data.get("variant", "fixed")


def _cmd_reduce(args) -> int:
    instance, variant = _parse_instance(_read_json(args.input))
    built = build_fixed_board(instance) if variant == "fixed" else build_free_board(instance)
    spans = {
        "gadgets": [list(s) for s in built.gadget_spans.gadgets],
        "terminal": list(built.gadget_spans.terminal),
        "mirror": None if built.gadget_spans.mirror is None else list(built.gadget_spans.mirror),
    }
    _emit({
        "board": board_to_json(built.board),
        "variant": built.variant,
        "claimed_threshold": built.claimed_threshold,
        "gadget_spans": spans,
    })
    return 0


def _cmd_verify(args) -> int:
    instance, variant = _parse_instance(_read_json(args.input))
    report = verify_reduction(instance, variant)
    _emit(report.to_json())
    return 0 if report.passed else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app
    from .service import GameService, ServiceConfig

    service = GameService(ServiceConfig(data_dir=Path(args.data_dir)))
    ui_dir = Path(args.ui_dir) if args.ui_dir else None
    uvicorn.run(create_app(service, ui_dir), host=args.host, port=args.port)
    return 0


def _cmd_rand_board(args) -> int:
    board = random_board(args.height, args.width, args.colours, args.seed)
    _emit(board_to_json(board))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="floodit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact optimum for a board or graph")
    p.add_argument("input", help="board/graph JSON file, or - for stdin")
    p.add_argument("--variant", choices=("free", "fixed"), default="free")
    p.add_argument("--pivot", type=int, default=0, help="fixed-variant pivot cell/vertex")
    p.add_argument("--target", type=int, default=None, help="1-based target colour (free)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("link", help="link costs from the connection table")
    p.add_argument("input")
    p.add_argument("--u", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--d", type=int, default=None, help="1-based colour")
    p.add_argument("--all", action="store_true", help="emit the full table")
    p.set_defaults(fn=_cmd_link)

    p = sub.add_parser("approx", help="additive approximation for a board")
    p.add_argument("input")
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("reduce", help="compile a supersequence instance to a board")
    p.add_argument("input", help='JSON {"strings": [...], "l": n, "variant": "fixed"|"free"}')
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify", help="verify the reduction's claims on an instance")
    p.add_argument("input")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("serve", help="run the JSON game service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data-dir", default="./flood-sessions")
    p.add_argument("--ui-dir", default=None, help="static front-end assets to serve at /")
    p.set_defaults(fn=_cmd_serve)

    p = sub.add_parser("rand-board", help="reproducible random board")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--colours", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(fn=_cmd_rand_board)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (FloodError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
