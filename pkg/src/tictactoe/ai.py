"""Perfect-play computer player via exhaustive negamax over the game tree.

Values are from the mover's perspective: +1 forced win, 0 forced draw,
-1 forced loss. The search is exact (no depth cutoff; the reachable state
space is only 5,478 positions) and memoized on (board, mover). Alongside
the value it tracks plies-to-end under optimal play, so move selection can
prefer fast wins and slow losses deterministically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import NoLegalMoves
from .rules import Board, GameResult, Mark, Move, apply_move, check_result, legal_moves


@dataclass(frozen=True)
class MoveChoice:
    """A chosen move with its exact game value and distance to the end."""

    row: int
    col: int
    value: int
    plies_to_end: int


def _prefer(value: int, plies: int, best_value: int, best_plies: int) -> bool:
    """True when (value, plies) strictly beats the current best for the mover."""
    if value != best_value:
        return value > best_value
    if value > 0:
        return plies < best_plies  # win as fast as possible
    return plies > best_plies  # draw out draws and losses


@lru_cache(maxsize=None)
def _search(board: Board, to_move: Mark) -> tuple[int, int]:
    """(value, plies to forced end) for the player about to move."""
    result = check_result(board)
    if result is GameResult.DRAW:
        return 0, 0
    if result is not GameResult.CONTINUE:
        # A finished board: whoever completed the line, the mover did not.
        won = (result is GameResult.X_WINS) == (to_move is Mark.X)
        return (1, 0) if won else (-1, 0)
    best_value, best_plies = -2, 0
    for row, col in legal_moves(board):
        child_value, child_plies = _search(apply_move(board, Move(to_move, row, col)), to_move.other)
        value, plies = -child_value, child_plies + 1
        if _prefer(value, plies, best_value, best_plies):
            best_value, best_plies = value, plies
    return best_value, best_plies


def minimax_value(board: Board, to_move: Mark) -> int:
    """Exact game value of the position for the player to move."""
    return _search(board, to_move)[0]


def best_move(board: Board, to_move: Mark) -> MoveChoice:
    """The optimal move, with deterministic tie-breaking.

    Ties are broken by value, then plies-to-end (fast wins, slow
    draws/losses), then smallest (row, col) in row-major order.
    """
    if check_result(board) is not GameResult.CONTINUE:
        raise NoLegalMoves("board is terminal")
    best: MoveChoice | None = None
    for row, col in legal_moves(board):
        child_value, child_plies = _search(apply_move(board, Move(to_move, row, col)), to_move.other)
        value, plies = -child_value, child_plies + 1
        if best is None or _prefer(value, plies, best.value, best.plies_to_end):
            best = MoveChoice(row, col, value, plies)
    assert best is not None
    return best


def random_legal_move(board: Board, to_move: Mark, rng: random.Random) -> MoveChoice:
    """A uniformly random legal move; deterministic under a seeded rng."""
    if check_result(board) is not GameResult.CONTINUE:
        raise NoLegalMoves("board is terminal")
    row, col = rng.choice(legal_moves(board))
    child_value, child_plies = _search(apply_move(board, Move(to_move, row, col)), to_move.other)
    return MoveChoice(row, col, -child_value, child_plies + 1)
