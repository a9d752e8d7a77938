"""Save-file round trips and rejection of every class of corrupt file."""

import json

import pytest
from checks import assert_session_invariants, board_text

from tictactoe.errors import InvalidSaveFile
from tictactoe.rules import Mark
from tictactoe.session import (
    GameSession,
    GameStats,
    Mode,
    from_save_dict,
    load_session,
    random_valid_session,
    save_session,
    to_save_dict,
)

CANONICAL_TEXT = (
    '{"version":1,"mode":"H2C","leadPlayer":"x",'
    '"stats":{"xWinCount":3,"oWinCount":1,"drawCount":2},'
    '"history":["x11","o00","x02"],"cursor":3}'
)


def canonical_dict() -> dict:
    return json.loads(CANONICAL_TEXT)


class TestRoundTrip:
    def test_canonical_file_survives_byte_for_byte(self, tmp_path):
        path = tmp_path / "set.json"
        path.write_text(CANONICAL_TEXT)
        session = load_session(path)
        assert session.mode is Mode.H2C
        assert session.lead_player is Mark.X
        assert session.stats == GameStats(3, 1, 2)
        assert session.encoded_history() == ["x11", "o00", "x02"]
        assert session.cursor == 3
        assert board_text(session.board) == "o.x.x...."
        assert session.next_player is Mark.O
        out = tmp_path / "resaved.json"
        save_session(session, out)
        assert out.read_text() == CANONICAL_TEXT + "\n"

    def test_key_order_matches_the_documented_format(self, tmp_path):
        path = tmp_path / "fresh.json"
        save_session(GameSession(), path)
        assert list(json.loads(path.read_text())) == [
            "version",
            "mode",
            "leadPlayer",
            "stats",
            "history",
            "cursor",
        ]

    def test_many_random_sessions_round_trip(self, tmp_path):
        path = tmp_path / "round.json"
        for seed in range(200):
            session = random_valid_session(seed)
            save_session(session, path)
            loaded = load_session(path)
            assert to_save_dict(loaded) == to_save_dict(session)
            assert board_text(loaded.board) == board_text(session.board)
            assert board_text(loaded.view_board()) == board_text(session.view_board())
            assert loaded.result is session.result
            assert loaded.next_player is session.next_player
            assert_session_invariants(loaded)

    def test_missing_file_raises_file_not_found(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_session(tmp_path / "nope.json")

    def test_unknown_extra_keys_are_ignored(self):
        data = canonical_dict()
        data["annotations"] = {"note": "irrelevant"}
        session = from_save_dict(data)
        assert session.encoded_history() == ["x11", "o00", "x02"]

    def test_file_stats_are_authoritative_over_replay(self):
        # A history that finishes a game would bump the counters during
        # replay; the stored stats already include that game.
        data = canonical_dict()
        data["history"] = ["x00", "o10", "x01", "o11", "x02"]
        data["cursor"] = 5
        data["stats"] = {"xWinCount": 5, "oWinCount": 0, "drawCount": 0}
        session = from_save_dict(data)
        assert session.status == "x Won"
        assert session.stats == GameStats(5, 0, 0)


def reject(data) -> str:
    with pytest.raises(InvalidSaveFile) as excinfo:
        from_save_dict(data)
    return excinfo.value.invariant


class TestCorruptFiles:
    def test_unparseable_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"version": 1,,,')
        with pytest.raises(InvalidSaveFile) as excinfo:
            load_session(path)
        assert excinfo.value.invariant == "json"

    def test_non_object_document(self):
        assert reject([1, 2, 3]) == "format"
        assert reject("just text") == "format"

    def test_wrong_or_missing_version(self):
        data = canonical_dict()
        data["version"] = 2
        assert reject(data) == "version"
        del data["version"]
        assert reject(data) == "version"

    def test_bad_mode(self):
        data = canonical_dict()
        data["mode"] = "Q2Q"
        assert reject(data) == "mode"
        data["mode"] = 7
        assert reject(data) == "mode"

    def test_bad_lead_player(self):
        data = canonical_dict()
        data["leadPlayer"] = "z"
        assert reject(data) == "leadPlayer"
        del data["leadPlayer"]
        assert reject(data) == "leadPlayer"

    def test_bad_stats(self):
        data = canonical_dict()
        data["stats"] = {"xWinCount": 1, "oWinCount": 0}
        assert reject(data) == "stats"
        data["stats"] = {"xWinCount": -1, "oWinCount": 0, "drawCount": 0}
        assert reject(data) == "stats"
        data["stats"] = {"xWinCount": "3", "oWinCount": 0, "drawCount": 0}
        assert reject(data) == "stats"
        data["stats"] = {"xWinCount": True, "oWinCount": 0, "drawCount": 0}
        assert reject(data) == "stats"

    def test_bad_history_container_or_tuples(self):
        data = canonical_dict()
        data["history"] = "x00"
        assert reject(data) == "history"
        data["history"] = ["q00"]
        assert reject(data) == "history"
        data["history"] = [7]
        assert reject(data) == "history"
        data["history"] = ["x00", "o01"] * 5  # ten moves cannot fit the board
        assert reject(data) == "history"

    def test_out_of_turn_moves(self):
        data = canonical_dict()
        data["history"] = ["x00", "x01"]
        data["cursor"] = 2
        assert reject(data) == "alternation"
        data["history"] = ["o00"]  # lead is x, so o may not start
        data["cursor"] = 1
        assert reject(data) == "alternation"

    def test_illegal_replay(self):
        data = canonical_dict()
        data["history"] = ["x00", "o00"]
        data["cursor"] = 2
        assert reject(data) == "legality"

    def test_move_after_the_game_ended(self):
        data = canonical_dict()
        data["history"] = ["x00", "o10", "x01", "o11", "x02", "o12"]
        data["cursor"] = 6
        assert reject(data) == "terminal"

    def test_cursor_out_of_bounds_or_wrong_type(self):
        data = canonical_dict()
        data["cursor"] = 5
        assert reject(data) == "cursor"
        data["cursor"] = -1
        assert reject(data) == "cursor"
        data["cursor"] = "2"
        assert reject(data) == "cursor"
        data["cursor"] = True
        assert reject(data) == "cursor"
        del data["cursor"]
        assert reject(data) == "cursor"
