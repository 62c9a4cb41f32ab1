"""Exception hierarchy shared across the engine and the CLI."""


class EngineError(Exception):
    """Base class for all engine errors."""


class PreconditionError(EngineError):
    """A mathematical precondition failed (parity, monogenicity, seed order)."""


class ShapeError(PreconditionError):
    """An expression does not have the structural shape an operation requires."""


class VerificationError(EngineError):
    """An internal consistency assertion failed; indicates an engine bug."""


class ParseError(EngineError):
    """Input text does not conform to the grammar."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)
        self.position = position
