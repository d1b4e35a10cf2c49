"""Game sessions: crash-safe persistence, move handling, hints, analysis.

Each session lives in one JSON document under the data directory,
written atomically (write-then-rename). Mutations on a session are
serialised by a per-session lock; distinct sessions are independent.
"""

from __future__ import annotations

import json
import os
import secrets
import tempfile
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from .connection import compute_table
from .core import (
    Board,
    FloodError,
    FloodState,
    IllegalMove,
    Move,
    apply_fixed_move,
    apply_free_move,
    board_from_json,
    board_to_json,
    min_region_path_count,
)
from .oracle import solve_fixed_exact, solve_free_exact

VARIANTS = ("free", "fixed")


class SessionNotFound(FloodError):
    """No persisted session under the given id."""


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: Path
    exact_regions: int = 12  # free-variant exact-hint ceiling
    exact_cells: int = 40    # fixed-variant exact-hint ceiling
    table_regions: int = 60  # connection-table affordability ceiling
    allow_moves_when_flooded: bool = False
    budget: int = 32


@dataclass(frozen=True)
class Hint:
    suggested: Move
    bound_kind: str  # "exact" | "lower"
    bound_value: int


@dataclass(frozen=True)
class GameSession:
    id: str
    variant: str
    pivot: int | None
    board: Board
    state: FloodState
    history: tuple[Move, ...]
    created_at: str
    updated_at: str

    @property
    def flooded(self) -> bool:
        return self.state.flooded


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _current_cells(board: Board, state: FloodState) -> list[int]:
    return [state.colour_of(i) for i in range(len(board.cells))]


def replay_history(board: Board, variant: str, pivot: int | None, history) -> FloodState:
    """Rebuild the current state by replaying moves from the initial board."""
    state = FloodState.from_board(board)
    for move in history:
        if variant == "fixed":
            state = apply_fixed_move(state, pivot if pivot is not None else 0, move.colour)
        else:
            state = apply_free_move(state, move)
    return state


class GameService:
    def __init__(self, config: ServiceConfig):
        self.config = config
        self.data_dir = Path(config.data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, session_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._locks.setdefault(session_id, threading.Lock())

    # --- persistence -----------------------------------------------------

    def _path(self, session_id: str) -> Path:
        if not session_id.isalnum():
            raise SessionNotFound(f"unknown session {session_id!r}")
        return self.data_dir / f"{session_id}.json"

    def session_document(self, session: GameSession) -> dict:
        """The persisted (and wire) form of a session; colours 1-based."""
        return {
            "id": session.id,
            "variant": session.variant,
            "pivot": session.pivot,
            "board": board_to_json(session.board),
            "cells": [c + 1 for c in _current_cells(session.board, session.state)],
            "history": [
                {"vertex": m.vertex, "colour": m.colour + 1} for m in session.history
            ],
            "moves_played": len(session.history),
            "flooded": session.flooded,
            "created_at": session.created_at,
            "updated_at": session.updated_at,
        }

    def _save(self, session: GameSession) -> None:
        doc = self.session_document(session)
        path = self._path(session.id)
        fd, tmp = tempfile.mkstemp(dir=self.data_dir, prefix=f".{session.id}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def _load(self, session_id: str) -> GameSession:
        path = self._path(session_id)
        try:
            doc = json.loads(path.read_text())
        except FileNotFoundError:
            raise SessionNotFound(f"unknown session {session_id!r}") from None
        board = board_from_json(doc["board"])
        history = tuple(
            Move(m["vertex"], m["colour"] - 1) for m in doc["history"]
        )
        state = replay_history(board, doc["variant"], doc["pivot"], history)
        stored = [c - 1 for c in doc["cells"]]
        if stored != _current_cells(board, state):
            raise FloodError(f"session {session_id} snapshot does not match its history")
        return GameSession(
            doc["id"], doc["variant"], doc["pivot"], board, state, history,
            doc["created_at"], doc["updated_at"],
        )

    # --- operations ------------------------------------------------------

    def create_game(self, board: Board, variant: str, pivot: int | None = None) -> GameSession:
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if variant == "fixed":
            pivot = 0 if pivot is None else pivot
            if not 0 <= pivot < len(board.cells):
                raise ValueError(f"pivot {pivot} outside the board")
        else:
            pivot = None
        now = _now()
        session = GameSession(
            secrets.token_hex(16), variant, pivot, board,
            FloodState.from_board(board), (), now, now,
        )
        self._save(session)
        return session

    def get_game(self, session_id: str) -> GameSession:
        return self._load(session_id)

    def play_move(self, session_id: str, move: Move) -> GameSession:
        with self._lock(session_id):
            session = self._load(session_id)
            if session.flooded and not self.config.allow_moves_when_flooded:
                raise IllegalMove("game is already flooded")
            if session.variant == "fixed":
                # pivot is implied; any supplied vertex is ignored
                stored = Move(None, move.colour)
                state = apply_fixed_move(session.state, session.pivot or 0, move.colour)
            else:
                if move.vertex is None:
                    raise IllegalMove("free-variant move needs a vertex")
                stored = move
                state = apply_free_move(session.state, move)
            session = replace(
                session, state=state, history=session.history + (stored,), updated_at=_now()
            )
            self._save(session)
            return session

    def undo(self, session_id: str) -> GameSession:
        with self._lock(session_id):
            session = self._load(session_id)
            if not session.history:
                raise IllegalMove("nothing to undo")
            history = session.history[:-1]
            state = replay_history(session.board, session.variant, session.pivot, history)
            session = replace(session, state=state, history=history, updated_at=_now())
            self._save(session)
            return session

    # --- hints and analysis ----------------------------------------------

    def hint(self, session_id: str) -> Hint:
        session = self._load(session_id)
        if session.flooded:
            raise IllegalMove("game is already flooded")
        state = session.state
        g = state.graph
        if session.variant == "fixed":
            if len(session.board.cells) <= self.config.exact_cells:
                result = solve_fixed_exact(
                    g, state.region_map[session.pivot or 0], budget=self.config.budget
                )
                return Hint(result.witness[0], "exact", result.optimum)
            colour = self._greedy_fixed_colour(session)
            return Hint(Move(None, colour), "lower", self._lower_bound(session))
        if g.vertex_count <= self.config.exact_regions:
            result = solve_free_exact(g, budget=self.config.budget)
            first = result.witness[0]
            # oracle vertices index the current graph; map back to a cell
            return Hint(Move(state.reps[first.vertex], first.colour), "exact", result.optimum)
        return Hint(self._greedy_free_move(session), "lower", self._lower_bound(session))

    def _greedy_free_move(self, session: GameSession) -> Move:
        g = session.state.graph
        best = None
        for w in range(g.vertex_count):
            for d in range(g.colour_count):
                if d == g.colours[w]:
                    continue
                absorbed = sum(1 for x in g.adjacency[w] if g.colours[x] == d)
                key = (-absorbed, session.state.reps[w], d)
                if best is None or key < best[0]:
                    best = (key, Move(session.state.reps[w], d))
        assert best is not None
        return best[1]

    def _greedy_fixed_colour(self, session: GameSession) -> int:
        g = session.state.graph
        w = session.state.region_map[session.pivot or 0]
        best = None
        for d in range(g.colour_count):
            if d == g.colours[w]:
                continue
            absorbed = sum(1 for x in g.adjacency[w] if g.colours[x] == d)
            key = (-absorbed, d)
            if best is None or key < best[0]:
                best = (key, d)
        assert best is not None
        return best[1]

    def _border_regions(self, session: GameSession) -> tuple[set[int], set[int]]:
        board, state = session.board, session.state
        left = {state.region_map[r * board.width] for r in range(board.height)}
        right = {state.region_map[r * board.width + board.width - 1] for r in range(board.height)}
        return left, right

    def _lower_bound(self, session: GameSession) -> int:
        state = session.state
        g = state.graph
        left, right = self._border_regions(session)
        count = min_region_path_count(g, left, right)
        bound = count // 2  # each move removes at most two areas from the best path
        if g.vertex_count <= self.config.table_regions:
            table = compute_table(g)
            board = session.board
            corners = [0, board.width - 1, (board.height - 1) * board.width, len(board.cells) - 1]
            regions = sorted({state.region_map[c] for c in corners})
            for i, a in enumerate(regions):
                for b in regions[i + 1:]:
                    bound = max(bound, table.query_link_any(a, b)[0])
        return max(bound, 1)

    def analysis(self, session_id: str) -> dict:
        """Region count, colours present, lower bounds, and the exact optimum when cheap."""
        session = self._load(session_id)
        state = session.state
        g = state.graph
        left, right = self._border_regions(session)
        count = min_region_path_count(g, left, right)
        report: dict[str, object] = {
            "region_count": g.vertex_count,
            "colours_present": sorted(set(g.colours)),
            "flooded": session.flooded,
            "area_lower_bound": count // 2,
            "link_lower_bound": None,
            "optimum": None,
        }
        if g.vertex_count <= self.config.table_regions:
            table = compute_table(g)
            u = state.region_map[0]
            v = state.region_map[session.board.width - 1]
            report["link_lower_bound"] = table.query_link_any(u, v)[0]
        if session.variant == "fixed":
            if len(session.board.cells) <= self.config.exact_cells:
                report["optimum"] = solve_fixed_exact(
                    g, state.region_map[session.pivot or 0], budget=self.config.budget
                ).optimum
        elif g.vertex_count <= self.config.exact_regions:
            report["optimum"] = solve_free_exact(g, budget=self.config.budget).optimum
        return report
