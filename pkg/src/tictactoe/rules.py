"""Pure rules of 3x3 tic-tac-toe: board values, legal moves, result detection.

Boards are immutable: ``apply_move`` returns a fresh board and never touches
its input, so history navigation and game-tree search can hold onto past
states freely. Cells are ``Mark`` members or ``None`` for empty, stored
row-major (index ``row * 3 + col``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CellOccupied, MalformedTuple, OutOfRange

# The 8 winning lines as row-major cell indices: rows, columns, diagonals.
WIN_LINES = (
    (0, 1, 2), (3, 4, 5), (6, 7, 8),
    (0, 3, 6), (1, 4, 7), (2, 5, 8),
    (0, 4, 8), (2, 4, 6),
)


class Mark(Enum):
    """A player's symbol."""

    X = "x"
    O = "o"

    @property
    def other(self) -> Mark:
        return Mark.O if self is Mark.X else Mark.X


class GameResult(Enum):
    """Outcome of a board, using the canonical single-character codes."""

    CONTINUE = "c"
    X_WINS = "x"
    O_WINS = "o"
    DRAW = "d"


@dataclass(frozen=True)
class Board:
    """3x3 grid of cells; hashable so search can memoize positions."""

    cells: tuple[Mark | None, ...] = (None,) * 9

    def cell(self, row: int, col: int) -> Mark | None:
        _check_bounds(row, col)
        return self.cells[row * 3 + col]


@dataclass(frozen=True)
class Move:
    """One placement: who, and where."""

    mark: Mark
    row: int
    col: int


_EMPTY = Board()


def empty_board() -> Board:
    """A board with all 9 cells empty."""
    return _EMPTY


def _check_bounds(row: int, col: int) -> None:
    if not (0 <= row <= 2 and 0 <= col <= 2):
        raise OutOfRange(f"row/col must be within 0..2, got ({row}, {col})")


def legal_moves(board: Board) -> list[tuple[int, int]]:
    """Coordinates of every empty cell, in row-major order."""
    return [divmod(i, 3) for i, c in enumerate(board.cells) if c is None]


def apply_move(board: Board, move: Move) -> Board:
    """Return a new board with the move placed; the input board is unchanged."""
    _check_bounds(move.row, move.col)
    index = move.row * 3 + move.col
    if board.cells[index] is not None:
        raise CellOccupied(f"cell ({move.row}, {move.col}) is already occupied")
    cells = board.cells[:index] + (move.mark,) + board.cells[index + 1 :]
    return Board(cells)


def check_result(board: Board) -> GameResult:
    """Scan the 8 lines; win beats draw, x's line is reported before o's."""
    cells = board.cells
    o_line = False
    for a, b, c in WIN_LINES:
        m = cells[a]
        if m is not None and cells[b] is m and cells[c] is m:
            if m is Mark.X:
                return GameResult.X_WINS
            o_line = True
    if o_line:
        return GameResult.O_WINS
    if None in cells:
        return GameResult.CONTINUE
    return GameResult.DRAW


def mark_counts(board: Board) -> tuple[int, int]:
    """(number of x cells, number of o cells)."""
    xs = sum(1 for c in board.cells if c is Mark.X)
    os_ = sum(1 for c in board.cells if c is Mark.O)
    return xs, os_


def encode_move(move: Move) -> str:
    """Canonical 3-character tuple text, e.g. Move(x, 0, 0) -> "x00"."""
    return f"{move.mark.value}{move.row}{move.col}"


def decode_move(text: str) -> Move:
    """Parse the 3-character tuple text; inverse of encode_move."""
    if not isinstance(text, str) or len(text) != 3:
        raise MalformedTuple(f"move tuple must be 3 characters, got {text!r}")
    mark_ch, row_ch, col_ch = text[0], text[1], text[2]
    if mark_ch not in ("x", "o"):
        raise MalformedTuple(f"mark must be 'x' or 'o', got {text!r}")
    if row_ch not in ("0", "1", "2") or col_ch not in ("0", "1", "2"):
        raise MalformedTuple(f"row/col digits must be 0-2, got {text!r}")
    return Move(Mark(mark_ch), int(row_ch), int(col_ch))
