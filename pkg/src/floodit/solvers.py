"""Polynomial solvers: two-colour radius, path solver, k x n approximation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .connection import compute_table
from .core import (
    Board,
    ColouredGraph,
    DisconnectedGraph,
    FloodState,
    FloodError,
    Move,
    apply_free_move,
)


@dataclass(frozen=True)
class TwoColourResult:
    """Optimum equals the graph radius; the witness plays only at the centre."""

    optimum: int
    centre: int
    witness: tuple[Move, ...]


@dataclass(frozen=True)
class ApproxResult:
    """Bracketing interval [lower, upper] for a board's optimum, with a strategy."""

    lower: int
    upper: int
    witness: tuple[Move, ...]


def solve_two_colour(graph: ColouredGraph) -> TwoColourResult:
    """Exact optimum for a connected graph using at most two colours.

    With two colours the only choice per move is where to play, and some
    optimal strategy plays every move at one vertex, so the optimum is the
    radius of the contracted graph.
    """
    if not graph.is_connected():
        raise DisconnectedGraph("two-colour solver needs a connected graph")
    present = sorted(set(graph.colours))
    if len(present) > 2:
        raise ValueError(f"two-colour solver got {len(present)} colours")
    state = FloodState.from_graph(graph)
    g = state.graph
    if g.vertex_count == 1:
        return TwoColourResult(0, state.reps[0], ())
    radius, centre = None, None
    for v in range(g.vertex_count):
        dist = _bfs_distances(g, v)
        ecc = max(dist)
        if radius is None or ecc < radius:
            radius, centre = ecc, v
    assert radius is not None and centre is not None
    moves = []
    colour = g.colours[centre]
    for _ in range(radius):
        colour = present[0] if colour == present[1] else present[1]
        moves.append(Move(state.reps[centre], colour))
    return TwoColourResult(radius, state.reps[centre], tuple(moves))


def _bfs_distances(graph: ColouredGraph, source: int) -> list[int]:
    dist = [-1] * graph.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def solve_path(path_colours: list[int], target: int | None = None) -> int:
    """Exact optimum for a path: flooding it is exactly linking its endpoints."""
    if not path_colours:
        raise ValueError("path must be non-empty")
    colour_count = max(path_colours) + 1
    if target is not None:
        if target < 0:
            raise ValueError(f"invalid target colour {target}")
        colour_count = max(colour_count, target + 1)
    n = len(path_colours)
    edges = frozenset((i, i + 1) for i in range(n - 1))
    graph = ColouredGraph(colour_count, tuple(path_colours), edges)
    state = FloodState.from_graph(graph)
    if state.graph.vertex_count == 1:
        return 0 if target is None or state.graph.colours[0] == target else 1
    table = compute_table(state.graph)
    u, v = state.region_map[0], state.region_map[n - 1]
    if target is not None:
        return table.query_link(u, v, target)
    return table.query_link_any(u, v)[0]


def approx_board(board: Board) -> ApproxResult:
    """Additive approximation for a k x n board.

    ``lower`` is the link cost between the top-left and top-right regions,
    which any flooding strategy must pay; the witness links them and then
    cycles through the board's colours at most height-1 times, giving
    ``upper = lower + colours * (height - 1)``.
    """
    state = FloodState.from_board(board)
    present = sorted(set(board.cells))
    u_cell, v_cell = 0, board.width - 1
    table = compute_table(state.graph)
    lower, _ = table.query_link_any(state.region_map[u_cell], state.region_map[v_cell])
    upper = lower + len(present) * (board.height - 1)
    witness: list[Move] = []
    cur = state
    while cur.region_map[u_cell] != cur.region_map[v_cell]:
        cur, move = _greedy_link_step(cur, u_cell, v_cell)
        witness.append(move)
    for _ in range(board.height - 1):
        if cur.flooded:
            break
        for d in present:
            if cur.flooded:
                break
            if cur.colour_of(u_cell) == d:
                continue  # a proper state has no absorbable neighbour of its own colour
            move = Move(u_cell, d)
            cur = apply_free_move(cur, move)
            witness.append(move)
    return ApproxResult(lower, upper, tuple(witness))


def _greedy_link_step(state: FloodState, u_cell: int, v_cell: int) -> tuple[FloodState, Move]:
    # some first move of an optimal linking sequence drops m(u, v) by one,
    # and no move can drop it by more; accept the first candidate that does
    g = state.graph
    su, sv = state.region_map[u_cell], state.region_map[v_cell]
    base = compute_table(g).query_link_any(su, sv)[0]
    candidates = [
        (w, d)
        for w in range(g.vertex_count)
        for d in range(g.colour_count)
        if d != g.colours[w]
    ]
    candidates.sort(key=lambda wd: (wd[0] != su, state.reps[wd[0]], wd[1]))
    for w, d in candidates:
        move = Move(state.reps[w], d)
        nxt = apply_free_move(state, move)
        nu, nv = nxt.region_map[u_cell], nxt.region_map[v_cell]
        if compute_table(nxt.graph).query_link_any(nu, nv)[0] < base:
            return nxt, move
    raise FloodError("no link-improving move found")
