"""JSON-over-HTTP surface for the game service.

Colours are 1-based on the wire; vertex and cell ids are 0-based.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .core import FloodError, IllegalMove, Move, board_from_json
from .service import GameService, SessionNotFound


class BoardIn(BaseModel):
    height: int
    width: int
    colours: int
    cells: list[int]


class CreateGameIn(BaseModel):
    board: BoardIn
    variant: str = "free"
    pivot: int | None = None


class MoveIn(BaseModel):
    vertex: int | None = None
    colour: int = Field(ge=1)


def create_app(service: GameService, ui_dir: Path | None = None) -> FastAPI:
    app = FastAPI(title="flood game service")

    def session_json(session) -> dict:
        return service.session_document(session)

    @app.post("/games")
    def create_game(payload: CreateGameIn) -> dict:
        try:
            board = board_from_json(payload.board.model_dump())
            session = service.create_game(board, payload.variant, payload.pivot)
        except (ValueError, FloodError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return session_json(session)

    @app.get("/games/{session_id}")
    def get_game(session_id: str) -> dict:
        return session_json(_guard(lambda: service.get_game(session_id)))

    @app.post("/games/{session_id}/moves")
    def play_move(session_id: str, payload: MoveIn) -> dict:
        move = Move(payload.vertex, payload.colour - 1)
        return session_json(_guard(lambda: service.play_move(session_id, move)))

    @app.post("/games/{session_id}/undo")
    def undo(session_id: str) -> dict:
        return session_json(_guard(lambda: service.undo(session_id)))

    @app.get("/games/{session_id}/hint")
    def hint(session_id: str) -> dict:
        h = _guard(lambda: service.hint(session_id))
        return {
            "suggested": {"vertex": h.suggested.vertex, "colour": h.suggested.colour + 1},
            "bound_kind": h.bound_kind,
            "bound_value": h.bound_value,
        }

    @app.get("/games/{session_id}/analysis")
    def analysis(session_id: str) -> dict:
        report = _guard(lambda: service.analysis(session_id))
        report["colours_present"] = [c + 1 for c in report["colours_present"]]
        return report

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _guard(fn):
    try:
        return fn()
    except SessionNotFound as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc
    except IllegalMove as exc:
        if "flooded" in str(exc):
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    except (ValueError, FloodError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
