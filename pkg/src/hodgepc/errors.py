"""Exception hierarchy.

``GameError`` subclasses signal domain failures (CLI exit code 1);
``FormatError`` signals unreadable input (CLI exit code 2).
"""


class GameError(ValueError):
    pass


class InvalidGame(GameError):
    pass


class InvalidForm(GameError):
    pass


class DimensionMismatch(GameError):
    pass


class SizeMismatch(GameError):
    pass


class Degenerate(GameError):
    pass


class MalformedCycle(GameError):
    pass


class CycleNotInGame(GameError):
    pass


class NoSuchDominance(GameError):
    pass


class NotMutual(GameError):
    pass


class Disconnected(GameError):
    def __init__(self, n_components: int):
        super().__init__(f"disconnected base space ({n_components} components)")
        self.n_components = n_components


class NegativeMargin(GameError):
    pass


class SupportViolation(GameError):
    pass


class Inconsistent(GameError):
    pass


class SingularBeyondKernel(GameError):
    pass


class NonConverged(GameError):
    pass


class RetriesExhausted(GameError):
    pass


class InvalidConfig(GameError):
    pass


class EmptySet(GameError):
    pass


class FormatError(Exception):
    """Unparseable input file; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
