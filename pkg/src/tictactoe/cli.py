"""Command-line entry point: interactive play, batch simulation, save-file
replay, and serving the HTTP API.

Exit codes: 0 success, 1 usage error, 2 unreadable or invalid save file,
3 server bind failure.
"""

from __future__ import annotations

import argparse
import random
import socket
import sys
from typing import Callable

from .ai import best_move, random_legal_move
from .errors import GameError, InvalidSaveFile
from .rules import Board, Mark
from .session import (
    GameSession,
    Mode,
    load_session,
    parse_lead_player,
    run_game_loop,
    status_text,
)

PROG = "tictactoe"


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the documented usage exit code is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Tic-tac-toe game sets, perfect play included.")
    commands = parser.add_subparsers(dest="command", required=True)

    play = commands.add_parser("play", parents=[], help="interactive terminal game set")
    play.add_argument("--mode", choices=[m.value for m in Mode], default="H2H")
    play.add_argument("--lead", choices=["x", "o"], default="x")

    simulate = commands.add_parser("simulate", help="headless computer-vs-computer batch")
    simulate.add_argument("--lead", choices=["x", "o"], default="x")
    simulate.add_argument("--games", type=_positive_int, default=100)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--x-strategy", choices=["perfect", "random"], default="perfect")
    simulate.add_argument("--o-strategy", choices=["perfect", "random"], default="perfect")

    replay = commands.add_parser("replay", help="browse a saved game set, navigation only")
    replay.add_argument("--file", required=True)

    serve = commands.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--ui", default=None, help="directory of static files to host at /")

    return parser


# -- rendering ---------------------------------------------------------------


def render_board(board: Board) -> str:
    lines = ["  0 1 2"]
    for row in range(3):
        cells = (board.cell(row, col) for col in range(3))
        lines.append(f"{row} " + " ".join("." if cell is None else cell.value for cell in cells))
    return "\n".join(lines)


def render_session(session: GameSession) -> str:
    stats = session.stats
    next_player = session.next_player
    lines = [
        render_board(session.view_board()),
        f"xWinCount {stats.x_win_count}  oWinCount {stats.o_win_count}  drawCount {stats.draw_count}",
        f"leadPlayer {session.lead_player.value}"
        f"  nextPlayer {'-' if next_player is None else next_player.value}"
        f"  movesCount {session.moves_count}  cursor {session.cursor}",
        f"status: {session.status}",
    ]
    return "\n".join(lines)


def summary_line(session: GameSession) -> str:
    stats = session.stats
    return (
        f"x={stats.x_win_count} o={stats.o_win_count}"
        f" draw={stats.draw_count} games={stats.games_completed}"
    )


# -- command parsing for the interactive loops --------------------------------

_NAV_COMMANDS = {"<<": "first", "<": "prev", ">": "next", ">>": "last"}


def parse_command(line: str) -> tuple | None:
    """One console line to one loop action; None means quit.

    Raises ValueError (or a flag-parsing GameError) with a user-facing
    message when the line is not a command.
    """
    words = line.strip().split()
    if not words:
        return ("noop",)
    head = words[0]
    if head in ("quit", "q", "exit"):
        return None
    if head in _NAV_COMMANDS and len(words) == 1:
        return ("nav", _NAV_COMMANDS[head])
    if head == "init" and len(words) == 1:
        return ("init",)
    if head == "stop" and len(words) == 1:
        return ("stop",)
    if head == "setup":
        if len(words) != 3:
            raise ValueError("usage: setup <H2H|H2C|C2H|C2C> <x|o>")
        return ("setup", Mode.parse(words[1]), parse_lead_player(words[2]))
    if len(words) == 2:
        try:
            return ("move", int(words[0]), int(words[1]))
        except ValueError:
            raise ValueError(f"not a command: {line.strip()!r} (try: row col, <, >, <<, >>, init, setup, quit)") from None
    raise ValueError(f"not a command: {line.strip()!r} (try: row col, <, >, <<, >>, init, setup, quit)")


def console_input_source(read_line: Callable[[], str], emit: Callable[[str], None]):
    """Wrap a line reader into a loop input source that re-prompts on
    unparseable commands and turns end-of-input into the exit signal."""

    def source(session: GameSession):
        while True:
            try:
                line = read_line()
            except EOFError:
                return None
            try:
                return parse_command(line)
            except (ValueError, GameError) as err:
                emit(str(err))

    return source


# -- subcommands ---------------------------------------------------------------


def perfect_player(board: Board, mark: Mark) -> tuple[int, int]:
    choice = best_move(board, mark)
    return choice.row, choice.col


def cmd_play(args, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    emit = lambda text: print(text, file=stdout)

    def read_line() -> str:
        line = stdin.readline()
        if line == "":
            raise EOFError
        return line

    def observer(kind, payload):
        if kind == "state":
            emit(render_session(payload))
        elif kind == "status":
            emit(payload)
        else:
            emit(str(payload))

    session = GameSession(mode=Mode.parse(args.mode), lead_player=parse_lead_player(args.lead))
    emit(render_session(session))
    run_game_loop(session, console_input_source(read_line, emit), perfect_player, observer)
    emit(summary_line(session))
    return 0


def cmd_simulate(args, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    rng = random.Random(args.seed)
    strategies = {"x": args.x_strategy, "o": args.o_strategy}

    def computer(board: Board, mark: Mark) -> tuple[int, int]:
        if strategies[mark.value] == "perfect":
            choice = best_move(board, mark)
        else:
            choice = random_legal_move(board, mark, rng)
        return choice.row, choice.col

    session = GameSession(mode=Mode.C2C, lead_player=parse_lead_player(args.lead))

    def between_games(current: GameSession):
        return None if current.stats.games_completed >= args.games else ("noop",)

    run_game_loop(session, between_games, computer)
    print(summary_line(session), file=stdout)
    return 0


def cmd_replay(args, stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    emit = lambda text: print(text, file=stdout)

    try:
        session = load_session(args.file)
    except FileNotFoundError:
        print(f"cannot read {args.file}: file not found", file=sys.stderr)
        return 2
    except InvalidSaveFile as err:
        print(f"invalid save file {args.file}: {err}", file=sys.stderr)
        return 2

    emit(render_session(session))
    while True:
        line = stdin.readline()
        if line == "":
            return 0
        try:
            action = parse_command(line)
        except (ValueError, GameError) as err:
            emit(str(err))
            continue
        if action is None:
            return 0
        if action[0] == "noop":
            continue
        if action[0] != "nav":
            emit("replay is view-only: navigation commands and quit only")
            continue
        try:
            {
                "first": session.move_to_first_state,
                "prev": session.move_to_previous_state,
                "next": session.move_to_next_state,
                "last": session.move_to_last_state,
            }[action[1]]()
        except GameError as err:
            emit(str(err))
            continue
        emit(render_session(session))


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
    except OSError as err:
        print(f"cannot bind {args.host}:{args.port}: {err}", file=sys.stderr)
        return 3
    finally:
        probe.close()

    uvicorn.run(build_app(static_dir=args.ui), host=args.host, port=args.port, log_level="info")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "play":
        return cmd_play(args)
    if args.command == "simulate":
        return cmd_simulate(args)
    if args.command == "replay":
        return cmd_replay(args)
    return cmd_serve(args)


if __name__ == "__main__":
    sys.exit(main())
