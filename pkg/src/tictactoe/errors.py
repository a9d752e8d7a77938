"""Error taxonomy shared by the rules, session, and service layers.

Every error carries a stable machine-readable ``code`` (its class name),
which the HTTP service maps one-to-one onto status codes.
"""


class GameError(Exception):
    """Base class for all domain errors."""

    code = "GameError"

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.code = cls.__name__

    def __init__(self, message=None):
        super().__init__(message if message is not None else self.code)


class OutOfRange(GameError):
    """Row or column outside 0..2."""


class CellOccupied(GameError):
    """Target cell already holds a mark."""


class MalformedTuple(GameError):
    """Move text does not match the 3-character encoding [xo][0-2][0-2]."""


class GameOver(GameError):
    """The current game has finished; initialize before playing on."""


class NotAtLatestState(GameError):
    """Cursor is navigated back in history; moves require the latest state."""


class AtFirstState(GameError):
    """Cursor already at the start of history."""


class AtLastState(GameError):
    """Cursor already at the end of history."""


class SessionStopped(GameError):
    """The game set was stopped; no further play is possible."""


class NoLegalMoves(GameError):
    """Move requested on a terminal board."""


class InvalidSaveFile(GameError):
    """Save file rejected; ``invariant`` names the violated rule."""

    def __init__(self, invariant, message=None):
        self.invariant = invariant
        super().__init__(message if message is not None else f"save file violates invariant: {invariant}")


class BadMode(GameError):
    """Mode text is not one of H2H, H2C, C2H, C2C."""


class BadLeadPlayer(GameError):
    """Lead player text is not 'x' or 'o'."""


class BadTarget(GameError):
    """Navigation target is not one of first, prev, next, last."""


class NotHumanTurn(GameError):
    """Manual move submitted for a computer-controlled seat."""


class NotComputerTurn(GameError):
    """Computer move requested for a human-controlled seat."""


class UnknownSession(GameError):
    """No session exists under the given id."""
