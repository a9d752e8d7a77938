"""Enumerate every complete game and tally outcomes.

Walks the full game tree with the engine's own move generator, counting
distinct complete games (move sequences) per result, plus the number of
distinct reachable positions. Runs in well under a second thanks to
memoization over (position, player to move).
"""

import time

from tictactoe.rules import GameResult, Mark, Move, apply_move, check_result, empty_board, legal_moves


def main() -> None:
    memo = {}

    def walk(board, mover):
        key = (board.cells, mover)
        if key in memo:
            return memo[key]
        result = check_result(board)
        if result is GameResult.X_WINS:
            totals = (1, 1, 0, 0)
        elif result is GameResult.O_WINS:
            totals = (1, 0, 1, 0)
        elif result is GameResult.DRAW:
            totals = (1, 0, 0, 1)
        else:
            total = x_wins = o_wins = draws = 0
            for row, col in legal_moves(board):
                t, x, o, d = walk(apply_move(board, Move(mover, row, col)), mover.other)
                total, x_wins, o_wins, draws = total + t, x_wins + x, o_wins + o, draws + d
            totals = (total, x_wins, o_wins, draws)
        memo[key] = totals
        return totals

    started = time.perf_counter()
    total, x_wins, o_wins, draws = walk(empty_board(), Mark.X)
    elapsed = time.perf_counter() - started

    print(f"complete games      {total:>10,}")
    print(f"  x wins            {x_wins:>10,}  ({x_wins / total:6.2%})")
    print(f"  o wins            {o_wins:>10,}  ({o_wins / total:6.2%})")
    print(f"  draws             {draws:>10,}  ({draws / total:6.2%})")
    print(f"reachable positions {len(memo):>10,}")
    print(f"elapsed             {elapsed:>10.3f}s")


if __name__ == "__main__":
    main()
