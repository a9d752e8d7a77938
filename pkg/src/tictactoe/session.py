"""Game sets: one configuration, many games, cumulative statistics.

A session owns the move history of the current game plus a viewing cursor
for stepping back through past states. The board is never stored as truth:
every viewed position is a replay prefix of the history, so the history is
the single source of record, which is also what the save-file format
serializes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Callable

from .errors import (
    AtFirstState,
    AtLastState,
    BadLeadPlayer,
    BadMode,
    CellOccupied,
    GameError,
    GameOver,
    InvalidSaveFile,
    MalformedTuple,
    NotAtLatestState,
    OutOfRange,
    SessionStopped,
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
)


class Mode(Enum):
    """Seat assignment: first letter controls the lead mark, last the other."""

    H2H = "H2H"
    H2C = "H2C"
    C2H = "C2H"
    C2C = "C2C"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        try:
            return cls(text)
        except ValueError:
            raise BadMode(f"unknown mode {text!r}; expected one of H2H, H2C, C2H, C2C") from None


class Controller(Enum):
    HUMAN = "human"
    COMPUTER = "computer"


def controller_of(mode: Mode, lead_player: Mark, mark: Mark) -> Controller:
    letter = mode.value[0] if mark is lead_player else mode.value[-1]
    return Controller.HUMAN if letter == "H" else Controller.COMPUTER


def parse_lead_player(text: str) -> Mark:
    if text == "x":
        return Mark.X
    if text == "o":
        return Mark.O
    raise BadLeadPlayer(f"unknown lead player {text!r}; expected 'x' or 'o'")


@dataclass(frozen=True)
class GameStats:
    x_win_count: int = 0
    o_win_count: int = 0
    draw_count: int = 0

    @property
    def games_completed(self) -> int:
        return self.x_win_count + self.o_win_count + self.draw_count

    def to_dict(self) -> dict[str, int]:
        return {
            "xWinCount": self.x_win_count,
            "oWinCount": self.o_win_count,
            "drawCount": self.draw_count,
        }


STATUS_TEXT = {
    GameResult.X_WINS: "x Won",
    GameResult.O_WINS: "o Won",
    GameResult.DRAW: "Draw",
    GameResult.CONTINUE: "Continue",
}


def status_text(result: GameResult) -> str:
    return STATUS_TEXT[result]


class GameSession:
    """A mutable game set. Not safe for concurrent mutation; callers that
    share a session across threads must serialize its operations."""

    def __init__(self, mode: Mode = Mode.H2H, lead_player: Mark = Mark.X) -> None:
        self.mode = mode
        self.lead_player = lead_player
        self.stats = GameStats()
        self._stopped = False
        self._history: list[Move] = []
        # _boards[k] is the position after history[:k]; index 0 is empty.
        self._boards: list[Board] = [empty_board()]
        self._cursor = 0

    # -- read-only state ------------------------------------------------

    @property
    def stopped(self) -> bool:
        return self._stopped

    @property
    def moves_count(self) -> int:
        return len(self._history)

    @property
    def cursor(self) -> int:
        return self._cursor

    @property
    def history(self) -> tuple[Move, ...]:
        return tuple(self._history)

    @property
    def board(self) -> Board:
        """The latest position, regardless of where the cursor points."""
        return self._boards[-1]

    @property
    def result(self) -> GameResult:
        return check_result(self.board)

    @property
    def next_player(self) -> Mark | None:
        if self.result is not GameResult.CONTINUE:
            return None
        return self.lead_player if self.moves_count % 2 == 0 else self.lead_player.other

    @property
    def status(self) -> str:
        return status_text(self.result)

    def encoded_history(self) -> list[str]:
        return [encode_move(move) for move in self._history]

    def view_board(self) -> Board:
        """The position the cursor points at."""
        return self._boards[self._cursor]

    # -- game-set lifecycle ----------------------------------------------

    def _require_active(self) -> None:
        if self._stopped:
            raise SessionStopped("the game set has been stopped")

    def set_up(self, mode: Mode, lead_player: Mark) -> None:
        """Change configuration and start a fresh game; stats carry over."""
        self._require_active()
        self.mode = mode
        self.lead_player = lead_player
        self._reset_game()

    def initialize(self) -> None:
        """Clear the current game for the next one; stats carry over."""
        self._require_active()
        self._reset_game()

    def _reset_game(self) -> None:
        self._history.clear()
        self._boards = [empty_board()]
        self._cursor = 0

    def stop(self) -> GameStats:
        """Close the set for further play and return the final statistics."""
        self._stopped = True
        return self.stats

    # -- play --------------------------------------------------------------

    def play_move(self, row: int, col: int) -> None:
        self._require_active()
        result = self.result
        if result is not GameResult.CONTINUE:
            raise GameOver(f"game already decided: {status_text(result)}")
        if self._cursor != self.moves_count:
            raise NotAtLatestState("navigate to the latest state before playing")
        mover = self.next_player
        assert mover is not None
        board = apply_move(self.board, Move(mover, row, col))
        self._history.append(Move(mover, row, col))
        self._boards.append(board)
        self._cursor = self.moves_count
        outcome = check_result(board)
        if outcome is GameResult.X_WINS:
            self.stats = replace(self.stats, x_win_count=self.stats.x_win_count + 1)
        elif outcome is GameResult.O_WINS:
            self.stats = replace(self.stats, o_win_count=self.stats.o_win_count + 1)
        elif outcome is GameResult.DRAW:
            self.stats = replace(self.stats, draw_count=self.stats.draw_count + 1)

    # -- history navigation (viewing only, allowed even after stop) -------

    def move_to_previous_state(self) -> None:
        if self._cursor == 0:
            raise AtFirstState("already at the first state")
        self._cursor -= 1

    def move_to_next_state(self) -> None:
        if self._cursor == self.moves_count:
            raise AtLastState("already at the last state")
        self._cursor += 1

    def move_to_first_state(self) -> None:
        self._cursor = 0

    def move_to_last_state(self) -> None:
        self._cursor = self.moves_count


def random_valid_session(seed: int) -> GameSession:
    """A session in a random consistent state: random configuration, a few
    completed games feeding the stats, and a random prefix of a random legal
    playout as the current game, viewed at a random cursor."""
    rng = random.Random(seed)
    mode = rng.choice(list(Mode))
    lead = rng.choice([Mark.X, Mark.O])
    session = GameSession(mode=mode, lead_player=lead)
    for _ in range(rng.randint(0, 3)):
        while session.result is GameResult.CONTINUE:
            row, col = rng.choice(legal_moves(session.board))
            session.play_move(row, col)
        session.initialize()

    playout: list[tuple[int, int]] = []
    board, mover = empty_board(), lead
    while check_result(board) is GameResult.CONTINUE:
        row, col = rng.choice(legal_moves(board))
        playout.append((row, col))
        board = apply_move(board, Move(mover, row, col))
        mover = mover.other
    for row, col in playout[: rng.randint(0, len(playout))]:
        session.play_move(row, col)

    for _ in range(session.moves_count - rng.randint(0, session.moves_count)):
        session.move_to_previous_state()
    return session


# -- interactive driver ------------------------------------------------------

# Actions an input source may yield:
#   ("move", row, col) | ("nav", "first"|"prev"|"next"|"last") | ("init",)
#   | ("setup", Mode, Mark) | ("stop",) | ("noop",) | None to exit.
InputSource = Callable[[GameSession], tuple | None]
ComputerPlayer = Callable[[Board, Mark], tuple[int, int]]
Observer = Callable[[str, object], None]

_NAV_TARGETS = {
    "first": GameSession.move_to_first_state,
    "prev": GameSession.move_to_previous_state,
    "next": GameSession.move_to_next_state,
    "last": GameSession.move_to_last_state,
}


def _dispatch(session: GameSession, action: tuple) -> bool:
    """Apply one input action; False means the loop should end."""
    kind = action[0]
    if kind == "move":
        session.play_move(action[1], action[2])
        return True
    if kind == "nav":
        try:
            nav = _NAV_TARGETS[action[1]]
        except KeyError:
            raise ValueError(f"unknown navigation target {action[1]!r}") from None
        nav(session)
        return True
    if kind == "init":
        session.initialize()
        return True
    if kind == "setup":
        session.set_up(action[1], action[2])
        return True
    if kind == "stop":
        session.stop()
        return False
    if kind == "noop":
        return True
    raise ValueError(f"unknown action {kind!r}")


def run_game_loop(
    session: GameSession,
    human_input_source: InputSource,
    computer_player: ComputerPlayer,
    observer: Observer | None = None,
) -> GameSession:
    """Drive a session until the input source signals exit or stops the set.

    Computer-controlled seats act automatically; each finished game is
    announced and the next one started. After a game the computer finished,
    the input source is consulted once before play resumes, so fully
    automatic sets still yield control between games. Game rule errors from
    input actions are reported to the observer and the loop re-prompts.
    """
    notify = observer if observer is not None else (lambda kind, payload: None)

    def finish_game_if_over() -> None:
        if session.result is not GameResult.CONTINUE:
            notify("status", session.status)
            session.initialize()
            notify("state", session)

    def consult_input() -> bool:
        action = human_input_source(session)
        if action is None:
            return False
        try:
            keep_going = _dispatch(session, action)
        except GameError as err:
            notify("error", str(err))
            return True
        notify("state", session)
        if not keep_going:
            return False
        finish_game_if_over()
        return True

    while True:
        mover = session.next_player
        computer_turn = (
            mover is not None
            and session.cursor == session.moves_count
            and controller_of(session.mode, session.lead_player, mover) is Controller.COMPUTER
        )
        if computer_turn:
            row, col = computer_player(session.board, mover)
            session.play_move(row, col)
            notify("state", session)
            game_over = session.result is not GameResult.CONTINUE
            finish_game_if_over()
            if game_over and not consult_input():
                break
            continue
        if not consult_input():
            break
    return session


# -- persistence ---------------------------------------------------------

SAVE_VERSION = 1


def to_save_dict(session: GameSession) -> dict:
    return {
        "version": SAVE_VERSION,
        "mode": session.mode.value,
        "leadPlayer": session.lead_player.value,
        "stats": session.stats.to_dict(),
        "history": session.encoded_history(),
        "cursor": session.cursor,
    }


def _validated_stats(data: object) -> GameStats:
    if not isinstance(data, dict) or set(data) != {"xWinCount", "oWinCount", "drawCount"}:
        raise InvalidSaveFile("stats", "stats must hold exactly xWinCount, oWinCount, drawCount")
    for key, value in data.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise InvalidSaveFile("stats", f"{key} must be a non-negative integer")
    return GameStats(data["xWinCount"], data["oWinCount"], data["drawCount"])


def from_save_dict(data: object) -> GameSession:
    """Rebuild a session, validating every invariant; the board and result
    are derived by replaying the history, never read from the file."""
    if not isinstance(data, dict):
        raise InvalidSaveFile("format", "save file must be a JSON object")
    if data.get("version") != SAVE_VERSION:
        raise InvalidSaveFile("version", f"unsupported version {data.get('version')!r}")
    if not isinstance(data.get("mode"), str):
        raise InvalidSaveFile("mode", "mode must be a string")
    try:
        mode = Mode.parse(data["mode"])
    except BadMode as err:
        raise InvalidSaveFile("mode", str(err)) from None
    try:
        lead = parse_lead_player(data.get("leadPlayer", ""))
    except BadLeadPlayer as err:
        raise InvalidSaveFile("leadPlayer", str(err)) from None
    stats = _validated_stats(data.get("stats"))

    history = data.get("history")
    if not isinstance(history, list) or len(history) > 9:
        raise InvalidSaveFile("history", "history must be a list of at most 9 move tuples")
    session = GameSession(mode=mode, lead_player=lead)
    for entry in history:
        if not isinstance(entry, str):
            raise InvalidSaveFile("history", f"move tuple must be a string, got {entry!r}")
        try:
            move = decode_move(entry)
        except MalformedTuple as err:
            raise InvalidSaveFile("history", str(err)) from None
        if session.result is not GameResult.CONTINUE:
            raise InvalidSaveFile("terminal", f"move {entry!r} follows a decided game")
        if move.mark is not session.next_player:
            raise InvalidSaveFile("alternation", f"move {entry!r} is out of turn")
        try:
            session.play_move(move.row, move.col)
        except (CellOccupied, OutOfRange) as err:
            raise InvalidSaveFile("legality", str(err)) from None
    # The file's counters are authoritative: the history only covers the
    # game in progress, while stats accumulate over the whole set.
    session.stats = stats

    cursor = data.get("cursor")
    if not isinstance(cursor, int) or isinstance(cursor, bool):
        raise InvalidSaveFile("cursor", "cursor must be an integer")
    if not 0 <= cursor <= session.moves_count:
        raise InvalidSaveFile("cursor", f"cursor {cursor} outside 0..{session.moves_count}")
    while session.cursor > cursor:
        session.move_to_previous_state()
    return session


def save_session(session: GameSession, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_save_dict(session), separators=(",", ":")) + "\n")


def load_session(path: str | Path) -> GameSession:
    text = Path(path).read_text()  # missing files surface as FileNotFoundError
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InvalidSaveFile("json", f"not valid JSON: {err}") from None
    return from_save_dict(data)
