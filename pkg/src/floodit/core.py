"""Flood-game model: coloured graphs, boards, moves, and contraction.

Moves and states are immutable values: applying a move returns a new
state, so states are safely shareable across threads.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class FloodError(Exception):
    """Base class for errors raised by this package."""


class IllegalMove(FloodError):
    """Move rejected: unknown vertex, bad colour, or not allowed now."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class DisconnectedGraph(FloodError):
    """Solver input must be connected."""


class BudgetExceeded(FloodError):
    """An exact search exhausted its move budget without reaching the goal."""

    def __init__(self, budget: int):
        super().__init__(f"no solution within budget of {budget} moves")
        self.budget = budget


@dataclass(frozen=True)
class ColouredGraph:
    """Simple undirected graph with one colour id per vertex.

    Colour ids are dense 0-based integers below ``colour_count``; external
    JSON uses 1-based labels (see :func:`graph_to_json`).
    """

    colour_count: int
    colours: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        colours = tuple(self.colours)
        object.__setattr__(self, "colours", colours)
        n = len(colours)
        if n == 0:
            raise ValueError("graph needs at least one vertex")
        if self.colour_count < 1:
            raise ValueError("colour_count must be at least 1")
        for v, c in enumerate(colours):
            if not 0 <= c < self.colour_count:
                raise ValueError(f"vertex {v} has colour {c}, expected 0..{self.colour_count - 1}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            if not (0 <= a and b < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def vertex_count(self) -> int:
        return len(self.colours)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(ns)) for ns in adj)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def is_proper(self) -> bool:
        return all(self.colours[a] != self.colours[b] for a, b in self.edges)

    def is_connected(self) -> bool:
        n = self.vertex_count
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == n


@dataclass(frozen=True)
class Board:
    """Rectangular grid of colour ids, row-major."""

    height: int
    width: int
    colour_count: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(self.cells))
        if self.height < 1 or self.width < 1:
            raise ValueError("board dimensions must be at least 1x1")
        if len(self.cells) != self.height * self.width:
            raise ValueError(f"expected {self.height * self.width} cells, got {len(self.cells)}")
        if self.colour_count < 1:
            raise ValueError("colour_count must be at least 1")
        for i, c in enumerate(self.cells):
            if not 0 <= c < self.colour_count:
                raise ValueError(f"cell {i} has colour {c}, expected 0..{self.colour_count - 1}")

    def cell_index(self, row: int, col: int) -> int:
        if not (0 <= row < self.height and 0 <= col < self.width):
            raise ValueError(f"cell ({row},{col}) outside {self.height}x{self.width} board")
        return row * self.width + col

    def rows(self) -> Iterator[tuple[int, ...]]:
        for r in range(self.height):
            yield self.cells[r * self.width:(r + 1) * self.width]


@dataclass(frozen=True)
class Move:
    """One flood move: recolour the component at ``vertex`` to ``colour``.

    ``vertex`` identifies any original vertex/cell of the component and is
    None for fixed-variant moves, where the pivot is implied.
    """

    vertex: int | None
    colour: int


@dataclass(frozen=True)
class Region:
    """A monochromatic component of the original vertices/cells."""

    colour: int
    members: frozenset[int]


@dataclass(frozen=True)
class RegionPartition:
    """Monochromatic components, ordered by smallest member id.

    The position of a region in ``regions`` is its vertex id in the
    contracted graph.
    """

    regions: tuple[Region, ...]

    @cached_property
    def _vertex_of(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, region in enumerate(self.regions):
            for m in region.members:
                out[m] = i
        return out

    def vertex_of(self, original: int) -> int:
        return self._vertex_of[original]


def contract_monochromatic(graph: ColouredGraph) -> tuple[ColouredGraph, RegionPartition]:
    """Contract every monochromatic component to a single vertex.

    The contracted graph is properly coloured; contracted vertex ids are
    assigned in order of each component's smallest original vertex id.
    """
    n = graph.vertex_count
    comp = [-1] * n
    regions: list[Region] = []
    for v in range(n):
        if comp[v] >= 0:
            continue
        colour = graph.colours[v]
        idx = len(regions)
        comp[v] = idx
        members = [v]
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for w in graph.adjacency[x]:
                if comp[w] < 0 and graph.colours[w] == colour:
                    comp[w] = idx
                    members.append(w)
                    queue.append(w)
        regions.append(Region(colour, frozenset(members)))
    edges = set()
    for a, b in graph.edges:
        ca, cb = comp[a], comp[b]
        if ca != cb:
            edges.add((ca, cb) if ca < cb else (cb, ca))
    contracted = ColouredGraph(graph.colour_count, tuple(r.colour for r in regions), frozenset(edges))
    return contracted, RegionPartition(tuple(regions))


def _grid_graph(board: Board) -> ColouredGraph:
    # 4-directional adjacency only
    edges = set()
    for r in range(board.height):
        for c in range(board.width):
            i = r * board.width + c
            if c + 1 < board.width:
                edges.add((i, i + 1))
            if r + 1 < board.height:
                edges.add((i, i + board.width))
    return ColouredGraph(board.colour_count, board.cells, frozenset(edges))


def board_to_graph(board: Board) -> tuple[ColouredGraph, RegionPartition]:
    """Contract a board's 4-adjacency grid into its region graph."""
    return contract_monochromatic(_grid_graph(board))


@dataclass(frozen=True)
class FloodState:
    """A properly coloured game position, tracked back to the originals.

    ``region_map`` sends each original vertex/cell to its current vertex;
    ``reps`` sends each current vertex to the smallest original id it
    contains, which is the canonical representative after merges.
    """

    graph: ColouredGraph
    region_map: tuple[int, ...]
    reps: tuple[int, ...]
    moves_played: int = 0

    @classmethod
    def from_graph(cls, graph: ColouredGraph) -> "FloodState":
        contracted, partition = contract_monochromatic(graph)
        region_map = [0] * graph.vertex_count
        reps = []
        for i, region in enumerate(partition.regions):
            reps.append(min(region.members))
            for m in region.members:
                region_map[m] = i
        return cls(contracted, tuple(region_map), tuple(reps), 0)

    @classmethod
    def from_board(cls, board: Board) -> "FloodState":
        return cls.from_graph(_grid_graph(board))

    @property
    def flooded(self) -> bool:
        return self.graph.vertex_count == 1

    @property
    def original_count(self) -> int:
        return len(self.region_map)

    def colour_of(self, original: int) -> int:
        return self.graph.colours[self.region_map[original]]


def _recolour(state: FloodState, current: int, colour: int) -> FloodState:
    g = state.graph
    if not 0 <= colour < g.colour_count:
        raise IllegalMove(f"colour {colour} outside 0..{g.colour_count - 1}")
    if g.colours[current] == colour:
        return replace(state, moves_played=state.moves_played + 1)
    merged = {current}
    merged.update(w for w in g.adjacency[current] if g.colours[w] == colour)
    items = [(state.reps[v], v, g.colours[v]) for v in range(g.vertex_count) if v not in merged]
    items.append((min(state.reps[v] for v in merged), -1, colour))
    items.sort(key=lambda t: t[0])
    mapping: dict[int, int] = {}
    reps: list[int] = []
    colours: list[int] = []
    for new_id, (rep, old, col) in enumerate(items):
        reps.append(rep)
        colours.append(col)
        if old < 0:
            for v in merged:
                mapping[v] = new_id
        else:
            mapping[old] = new_id
    edges = set()
    for a, b in g.edges:
        na, nb = mapping[a], mapping[b]
        if na != nb:
            edges.add((na, nb) if na < nb else (nb, na))
    new_graph = ColouredGraph(g.colour_count, tuple(colours), frozenset(edges))
    new_map = tuple(mapping[v] for v in state.region_map)
    return FloodState(new_graph, new_map, tuple(reps), state.moves_played + 1)


def apply_free_move(state: FloodState, move: Move) -> FloodState:
    """Recolour the component containing ``move.vertex`` and merge."""
    if move.vertex is None:
        raise IllegalMove("free-variant move needs a vertex")
    if not 0 <= move.vertex < state.original_count:
        raise IllegalMove(f"unknown vertex {move.vertex}")
    return _recolour(state, state.region_map[move.vertex], move.colour)


def apply_fixed_move(state: FloodState, pivot: int, colour: int) -> FloodState:
    """Recolour the pivot's current component; identical to a free move there."""
    if not 0 <= pivot < state.original_count:
        raise IllegalMove(f"unknown pivot {pivot}")
    return _recolour(state, state.region_map[pivot], colour)


def apply_sequence(state: FloodState, moves: Sequence[Move]) -> FloodState:
    """Fold free moves in order; the first invalid move aborts with its index."""
    for i, move in enumerate(moves):
        try:
            state = apply_free_move(state, move)
        except IllegalMove as exc:
            raise IllegalMove(f"move {i}: {exc}", index=i) from exc
    return state


def is_linked(state: FloodState, originals: Iterable[int]) -> bool:
    """True iff all given originals lie in one current component."""
    seen = set()
    for o in originals:
        if not 0 <= o < state.original_count:
            raise IllegalMove(f"unknown vertex {o}")
        seen.add(state.region_map[o])
    return len(seen) <= 1


def min_region_path_count(graph: ColouredGraph, sources: Iterable[int], targets: Iterable[int]) -> int:
    """Minimum number of vertices on a path from ``sources`` to ``targets``.

    Plain multi-source BFS; shortest paths are simple, so this is the
    smallest count of monochromatic areas any source-target path can touch.
    """
    src = set(sources)
    dst = set(targets)
    if not src or not dst:
        raise ValueError("sources and targets must be non-empty")
    dist = {v: 0 for v in src}
    queue = deque(src)
    while queue:
        v = queue.popleft()
        if v in dst:
            return dist[v] + 1
        for w in graph.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    raise FloodError("targets unreachable from sources")


# --- external JSON formats (colours are 1-based outside this package) ---


def board_to_json(board: Board) -> dict:
    return {
        "height": board.height,
        "width": board.width,
        "colours": board.colour_count,
        "cells": [c + 1 for c in board.cells],
    }


def board_from_json(data: dict) -> Board:
    try:
        cells = tuple(int(c) - 1 for c in data["cells"])
        return Board(int(data["height"]), int(data["width"]), int(data["colours"]), cells)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed board JSON: {exc}") from exc


def graph_to_json(graph: ColouredGraph) -> dict:
    return {
        "colours": graph.colour_count,
        "vertices": [c + 1 for c in graph.colours],
        "edges": sorted([u, v] for u, v in graph.edges),
    }


def graph_from_json(data: dict) -> ColouredGraph:
    try:
        colours = tuple(int(c) - 1 for c in data["vertices"])
        edges = frozenset((int(u), int(v)) for u, v in data["edges"])
        return ColouredGraph(int(data["colours"]), colours, edges)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc


def random_board(height: int, width: int, colour_count: int, seed: int) -> Board:
    """Reproducible random board.

    Cells are drawn row-major with ``random.Random(seed).randrange(colour_count)``
    (Mersenne Twister), so a (height, width, colours, seed) tuple always
    names the same board.
    """
    rng = random.Random(seed)
    cells = tuple(rng.randrange(colour_count) for _ in range(height * width))
    return Board(height, width, colour_count, cells)
