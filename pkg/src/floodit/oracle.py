"""Exhaustive exact solvers: ground truth for the polynomial algorithms.

Free-variant searches run iterative-deepening DFS over canonical
contracted states (assignment of base regions to part representatives
plus current colours), pruned by admissible lower bounds and a
per-iteration transposition table. Moves are expanded in (representative,
colour) order, so witnesses are the lexicographically smallest optimal
sequences. The fixed variant searches flooded-region bitmasks
breadth-first, since only the pivot component ever changes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    BudgetExceeded,
    ColouredGraph,
    DisconnectedGraph,
    FloodState,
    Move,
)

DEFAULT_BUDGET = 32

# search state: (assign, cols) with assign[i] = smallest base vertex of
# i's part and cols[i] = current colour of i's part, indexed by the base
# (contracted-input) vertices
_State = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class SolveResult:
    """An exact optimum plus a witness replaying to the goal."""

    optimum: int
    witness: tuple[Move, ...]
    target_colour: int | None = None


def _require_connected(graph: ColouredGraph) -> None:
    if not graph.is_connected():
        raise DisconnectedGraph("exact solvers need a connected graph")


def _part_adjacency(assign: tuple[int, ...], edges) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {r: set() for r in set(assign)}
    for a, b in edges:
        ra, rb = assign[a], assign[b]
        if ra != rb:
            adj[ra].add(rb)
            adj[rb].add(ra)
    return adj


def _successors(state: _State, edges, colour_count: int):
    assign, cols = state
    n = len(assign)
    adj = _part_adjacency(assign, edges)
    for r in sorted(adj):
        cur = cols[r]
        for d in range(colour_count):
            if d == cur:
                continue
            merged = {r}
            merged.update(r2 for r2 in adj[r] if cols[r2] == d)
            nr = min(merged)
            new_assign = tuple(nr if assign[i] in merged else assign[i] for i in range(n))
            new_cols = tuple(d if assign[i] in merged else cols[i] for i in range(n))
            yield (r, d), (new_assign, new_cols)


def _part_distances(assign: tuple[int, ...], edges, source: int) -> dict[int, int]:
    adj = _part_adjacency(assign, edges)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _h_flood(state: _State, edges, target: int | None) -> int:
    # admissible: each move shrinks the part-graph diameter by <= 2,
    # removes <= 1 colour from those still to eliminate
    assign, cols = state
    reps = sorted(set(assign))
    if len(reps) == 1:
        return 0 if target is None or cols[reps[0]] == target else 1
    diam = 0
    for r in reps:
        dist = _part_distances(assign, edges, r)
        diam = max(diam, max(dist.values()))
    h = (diam + 1) // 2
    present = {cols[r] for r in reps}
    if target is None:
        h = max(h, len(present) - 1)
    else:
        h = max(h, len(present - {target}))
    return h


def _h_link(state: _State, edges, u: int, v: int, target: int | None) -> int:
    assign, cols = state
    if assign[u] == assign[v]:
        return 0 if target is None or cols[u] == target else 1
    dist = _part_distances(assign, edges, assign[u])
    return (dist[assign[v]] + 1) // 2


def _bounded_dfs(state, depth, limit, succ, goal, heuristic, seen):
    for move, nxt in succ(state):
        nd = depth + 1
        if goal(nxt):
            return [move]
        if nd >= limit or nd + heuristic(nxt) > limit:
            continue
        prev = seen.get(nxt)
        if prev is not None and prev <= nd:
            continue
        seen[nxt] = nd
        sub = _bounded_dfs(nxt, nd, limit, succ, goal, heuristic, seen)
        if sub is not None:
            return [move] + sub
    return None


def _ida_search(start: _State, succ, goal, heuristic, budget: int) -> list[tuple[int, int]]:
    if goal(start):
        return []
    for limit in range(max(heuristic(start), 1), budget + 1):
        seen = {start: 0}
        path = _bounded_dfs(start, 0, limit, succ, goal, heuristic, seen)
        if path is not None:
            return path
    raise BudgetExceeded(budget)


def _base_state(graph: ColouredGraph) -> tuple[FloodState, _State, list[tuple[int, int]]]:
    state0 = FloodState.from_graph(graph)
    base = state0.graph
    start = (tuple(range(base.vertex_count)), base.colours)
    return state0, start, sorted(base.edges)


def _to_moves(state0: FloodState, path: list[tuple[int, int]]) -> tuple[Move, ...]:
    # base vertex ids are ordered by representative, so min base id of a
    # part names the smallest original vertex
    return tuple(Move(state0.reps[r], d) for r, d in path)


def _check_colour(graph: ColouredGraph, d: int | None) -> None:
    if d is not None and not 0 <= d < graph.colour_count:
        raise ValueError(f"colour {d} outside 0..{graph.colour_count - 1}")


def solve_free_exact(graph: ColouredGraph, target: int | None = None,
                     budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum free-variant moves to flood ``graph`` (in ``target`` if given)."""
    _require_connected(graph)
    _check_colour(graph, target)
    state0, start, edges = _base_state(graph)
    cc = graph.colour_count

    def goal(state: _State) -> bool:
        assign, cols = state
        r0 = assign[0]
        return all(a == r0 for a in assign) and (target is None or cols[r0] == target)

    path = _ida_search(
        start,
        lambda s: _successors(s, edges, cc),
        goal,
        lambda s: _h_flood(s, edges, target),
        budget,
    )
    achieved = path[-1][1] if path else state0.graph.colours[0]
    return SolveResult(len(path), _to_moves(state0, path), target if target is not None else achieved)


def link_exact(graph: ColouredGraph, u: int, v: int, d: int | None = None,
               budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum moves until ``u`` and ``v`` share a component (of colour ``d``)."""
    _require_connected(graph)
    _check_colour(graph, d)
    n = graph.vertex_count
    for x in (u, v):
        if not 0 <= x < n:
            raise ValueError(f"vertex {x} outside 0..{n - 1}")
    state0, start, edges = _base_state(graph)
    cc = graph.colour_count
    su, sv = state0.region_map[u], state0.region_map[v]

    def goal(state: _State) -> bool:
        assign, cols = state
        return assign[su] == assign[sv] and (d is None or cols[su] == d)

    path = _ida_search(
        start,
        lambda s: _successors(s, edges, cc),
        goal,
        lambda s: _h_link(s, edges, su, sv, d),
        budget,
    )
    if d is not None:
        achieved = d
    elif path:
        achieved = path[-1][1]
    else:
        achieved = state0.graph.colours[su]
    return SolveResult(len(path), _to_moves(state0, path), achieved)


def solve_fixed_exact(graph: ColouredGraph, pivot: int,
                      budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum moves to flood ``graph`` playing only at ``pivot``.

    States are bitmasks of flooded base regions: the flooded set plus the
    initial colouring determines every future absorption, and any two
    reachable states with equal flooded sets allow exactly the same
    useful moves.
    """
    _require_connected(graph)
    if not 0 <= pivot < graph.vertex_count:
        raise ValueError(f"pivot {pivot} outside 0..{graph.vertex_count - 1}")
    state0 = FloodState.from_graph(graph)
    base = state0.graph
    p = base.vertex_count
    if p == 1:
        return SolveResult(0, (), base.colours[0])
    nbr_mask = [0] * p
    for a, b in base.edges:
        nbr_mask[a] |= 1 << b
        nbr_mask[b] |= 1 << a
    colour_mask = [0] * base.colour_count
    for r, c in enumerate(base.colours):
        colour_mask[c] |= 1 << r
    full = (1 << p) - 1
    start = 1 << state0.region_map[pivot]
    parents: dict[int, tuple[int, int] | None] = {start: None}
    queue = deque([(start, nbr_mask[state0.region_map[pivot]], 0)])
    goal_flooded = None
    while queue:
        flooded, adj, depth = queue.popleft()
        if depth >= budget:
            continue
        for d in range(base.colour_count):
            newly = adj & colour_mask[d] & ~flooded
            if not newly:
                continue
            nxt = flooded | newly
            if nxt in parents:
                continue
            parents[nxt] = (flooded, d)
            if nxt == full:
                goal_flooded = nxt
                queue.clear()
                break
            new_adj = adj
            rest = newly
            while rest:
                low = rest & -rest
                new_adj |= nbr_mask[low.bit_length() - 1]
                rest ^= low
            queue.append((nxt, new_adj, depth + 1))
    if goal_flooded is None:
        raise BudgetExceeded(budget)
    colours: list[int] = []
    node = goal_flooded
    while parents[node] is not None:
        prev, d = parents[node]  # type: ignore[misc]
        colours.append(d)
        node = prev
    colours.reverse()
    witness = tuple(Move(None, d) for d in colours)
    return SolveResult(len(colours), witness, colours[-1] if colours else base.colours[0])
