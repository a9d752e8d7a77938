"""Evaluate all nine opening moves under perfect play.

For each first move by x: the exact game value (all are draws, a classic
result), how long the game lasts under optimal play from both sides, and
o's best reply. Shows why the search's tie-breaking prefers (0,0): every
opening has equal value, so the row-major rule decides.
"""

from tictactoe.ai import best_move, minimax_value
from tictactoe.rules import Mark, Move, apply_move, empty_board

VALUE_LABEL = {1: "x wins", 0: "draw", -1: "o wins"}


def main() -> None:
    print("opening  value    plies  best reply by o")
    for row in range(3):
        for col in range(3):
            board = apply_move(empty_board(), Move(Mark.X, row, col))
            value_for_o = minimax_value(board, Mark.O)
            reply = best_move(board, Mark.O)
            outcome = VALUE_LABEL[-value_for_o]
            print(
                f"x({row},{col})   {outcome:7}  {reply.plies_to_end + 1:>4}   "
                f"o({reply.row},{reply.col})"
            )


if __name__ == "__main__":
    main()
