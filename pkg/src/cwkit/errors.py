"""Exception hierarchy shared by all cwkit modules.

The CLI maps these onto exit codes: InputError -> 2, CapacityError -> 3,
InvariantViolation -> 4.
"""


class CwkitError(Exception):
    """Base class for all cwkit errors."""


class InputError(CwkitError):
    """Malformed input: bad graph data, bad arguments, violated preconditions."""


class ParseError(InputError):
    """Syntax error in one of the text formats, with a position."""

    def __init__(self, message: str, text: str = "", pos: int = -1):
        if pos >= 0:
            message = f"{message} (at position {pos}: {text[pos:pos + 12]!r})"
        super().__init__(message)
        self.pos = pos


class HypothesisError(InputError):
    """A stated numeric hypothesis (such as n > m+1) does not hold."""


class CapacityError(CwkitError):
    """The input exceeds a configured size cap for an exponential procedure.

    Raised instead of ever returning an approximate answer.
    """


class InvariantViolation(CwkitError):
    """An internal consistency guarantee failed; always a bug, never user error."""
