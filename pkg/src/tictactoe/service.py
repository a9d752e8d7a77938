"""HTTP + JSON facade over game sessions.

Sessions live in memory behind opaque ids. Requests may arrive concurrently,
but each session's operations are serialized through a per-session lock,
honoring the single-writer contract. Every error surfaces as a JSON body
{"code", "message"} with a stable mapping from error code to HTTP status.
"""

from __future__ import annotations

import secrets
import threading
from contextlib import contextmanager
from typing import Iterator

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .ai import best_move
from .errors import (
    BadTarget,
    GameError,
    GameOver,
    NotAtLatestState,
    NotComputerTurn,
    NotHumanTurn,
    SessionStopped,
    UnknownSession,
)
from .rules import GameResult
from .session import (
    Controller,
    GameSession,
    Mode,
    controller_of,
    load_session,
    parse_lead_player,
    save_session,
)

STATUS_BY_CODE = {
    "BadMode": 400,
    "BadLeadPlayer": 400,
    "BadTarget": 400,
    "OutOfRange": 400,
    "UnknownSession": 404,
    "GameOver": 409,
    "CellOccupied": 409,
    "NotAtLatestState": 409,
    "NotHumanTurn": 409,
    "NotComputerTurn": 409,
    "AtFirstState": 409,
    "AtLastState": 409,
    "SessionStopped": 410,
    "InvalidSaveFile": 422,
}


class SessionStore:
    """Thread-safe id → session registry with per-session mutual exclusion."""

    def __init__(self) -> None:
        self._sessions: dict[str, GameSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def create(self, session: GameSession) -> str:
        session_id = secrets.token_hex(8)
        with self._registry_lock:
            self._sessions[session_id] = session
            self._locks[session_id] = threading.Lock()
        return session_id

    @contextmanager
    def locked(self, session_id: str) -> Iterator[GameSession]:
        with self._registry_lock:
            try:
                session = self._sessions[session_id]
                lock = self._locks[session_id]
            except KeyError:
                raise UnknownSession(f"no session with id {session_id!r}") from None
        with lock:
            yield session


def session_view(session_id: str, session: GameSession) -> dict:
    """The full JSON projection of a session; board is the cursor's view."""
    next_player = session.next_player
    return {
        "id": session_id,
        "mode": session.mode.value,
        "leadPlayer": session.lead_player.value,
        "board": ["" if cell is None else cell.value for cell in session.view_board().cells],
        "result": session.result.value,
        "status": session.status,
        "movesCount": session.moves_count,
        "cursor": session.cursor,
        "nextPlayer": None if next_player is None else next_player.value,
        "stats": session.stats.to_dict(),
        "history": session.encoded_history(),
    }


class CreateSessionBody(BaseModel):
    mode: str = "H2H"
    leadPlayer: str = "x"


class MoveBody(BaseModel):
    row: int
    col: int


class NavigateBody(BaseModel):
    target: str


class SetupBody(BaseModel):
    mode: str | None = None
    leadPlayer: str | None = None


class FilePathBody(BaseModel):
    path: str


def _require_playable(session: GameSession) -> None:
    """Common move preconditions, checked in a fixed precedence order."""
    if session.stopped:
        raise SessionStopped("the game set has been stopped")
    if session.result is not GameResult.CONTINUE:
        raise GameOver(f"game already decided: {session.status}")
    if session.cursor != session.moves_count:
        raise NotAtLatestState("navigate to the latest state before playing")


def build_app(store: SessionStore | None = None, static_dir: str | None = None) -> FastAPI:
    store = store if store is not None else SessionStore()
    app = FastAPI(title="tictactoe", docs_url=None, redoc_url=None)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(GameError)
    def game_error_handler(request, exc: GameError):
        status = STATUS_BY_CODE.get(exc.code, 400)
        content = {"code": exc.code, "message": str(exc)}
        invariant = getattr(exc, "invariant", None)
        if invariant is not None:
            content["invariant"] = invariant
        return JSONResponse(status_code=status, content=content)

    @app.exception_handler(FileNotFoundError)
    def missing_file_handler(request, exc: FileNotFoundError):
        return JSONResponse(status_code=404, content={"code": "FileNotFound", "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    def validation_handler(request, exc: RequestValidationError):
        return JSONResponse(status_code=422, content={"code": "ValidationError", "message": str(exc)})

    @app.post("/sessions")
    def create_session(body: CreateSessionBody | None = None) -> dict:
        body = body if body is not None else CreateSessionBody()
        session = GameSession(mode=Mode.parse(body.mode), lead_player=parse_lead_player(body.leadPlayer))
        return session_view(store.create(session), session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        with store.locked(session_id) as session:
            return session_view(session_id, session)

    @app.post("/sessions/{session_id}/moves")
    def play_human_move(session_id: str, body: MoveBody) -> dict:
        with store.locked(session_id) as session:
            _require_playable(session)
            mover = session.next_player
            assert mover is not None
            if controller_of(session.mode, session.lead_player, mover) is not Controller.HUMAN:
                raise NotHumanTurn(f"{mover.value} is computer-controlled; use the ai-move endpoint")
            session.play_move(body.row, body.col)
            return session_view(session_id, session)

    @app.post("/sessions/{session_id}/ai-move")
    def play_computer_move(session_id: str) -> dict:
        with store.locked(session_id) as session:
            _require_playable(session)
            mover = session.next_player
            assert mover is not None
            if controller_of(session.mode, session.lead_player, mover) is not Controller.COMPUTER:
                raise NotComputerTurn(f"{mover.value} is human-controlled; submit a move instead")
            choice = best_move(session.board, mover)
            session.play_move(choice.row, choice.col)
            return session_view(session_id, session)

    @app.post("/sessions/{session_id}/navigate")
    def navigate(session_id: str, body: NavigateBody) -> dict:
        with store.locked(session_id) as session:
            if body.target == "first":
                session.move_to_first_state()
            elif body.target == "prev":
                session.move_to_previous_state()
            elif body.target == "next":
                session.move_to_next_state()
            elif body.target == "last":
                session.move_to_last_state()
            else:
                raise BadTarget(f"unknown target {body.target!r}; expected first, prev, next or last")
            return session_view(session_id, session)

    @app.post("/sessions/{session_id}/initialize")
    def initialize(session_id: str) -> dict:
        with store.locked(session_id) as session:
            session.initialize()
            return session_view(session_id, session)

    @app.put("/sessions/{session_id}/setup")
    def set_up(session_id: str, body: SetupBody | None = None) -> dict:
        body = body if body is not None else SetupBody()
        with store.locked(session_id) as session:
            mode = Mode.parse(body.mode) if body.mode is not None else session.mode
            lead = parse_lead_player(body.leadPlayer) if body.leadPlayer is not None else session.lead_player
            session.set_up(mode, lead)
            return session_view(session_id, session)

    @app.post("/sessions/{session_id}/stop")
    def stop(session_id: str) -> dict:
        with store.locked(session_id) as session:
            return session.stop().to_dict()

    @app.post("/sessions/{session_id}/save")
    def save(session_id: str, body: FilePathBody) -> dict:
        with store.locked(session_id) as session:
            save_session(session, body.path)
            return session_view(session_id, session)

    @app.post("/sessions/load")
    def load(body: FilePathBody) -> dict:
        session = load_session(body.path)
        return session_view(store.create(session), session)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
