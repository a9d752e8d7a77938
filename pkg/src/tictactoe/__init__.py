"""Tic-tac-toe engine with perfect play, replayable sessions, and an HTTP API."""

from .errors import (
    AtFirstState,
    AtLastState,
    BadLeadPlayer,
    BadMode,
    BadTarget,
    CellOccupied,
    GameError,
    GameOver,
    InvalidSaveFile,
    MalformedTuple,
    NoLegalMoves,
    NotAtLatestState,
    NotComputerTurn,
    NotHumanTurn,
    OutOfRange,
    SessionStopped,
    UnknownSession,
)
from .rules import (
    Board,
    GameResult,
    Mark,
    Move,
    apply_move,
    check_result,
    decode_move,
    empty_board,
    encode_move,
    legal_moves,
    mark_counts,
)

__all__ = [
    "AtFirstState",
    "AtLastState",
    "BadLeadPlayer",
    "BadMode",
    "BadTarget",
    "Board",
    "CellOccupied",
    "GameError",
    "GameOver",
    "GameResult",
    "InvalidSaveFile",
    "MalformedTuple",
    "Mark",
    "Move",
    "NoLegalMoves",
    "NotAtLatestState",
    "NotComputerTurn",
    "NotHumanTurn",
    "OutOfRange",
    "SessionStopped",
    "UnknownSession",
    "apply_move",
    "check_result",
    "decode_move",
    "empty_board",
    "encode_move",
    "legal_moves",
    "mark_counts",
]
