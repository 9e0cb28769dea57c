"""Exception hierarchy shared by every setlab module."""


class SetlabError(Exception):
    """Base class for all errors raised by setlab."""


class DimensionError(SetlabError, ValueError):
    """Cards or tuples of mismatched length."""


class PreconditionError(SetlabError, ValueError):
    """An operation was called on input violating its precondition."""


class ConstructionError(SetlabError):
    """A reduction produced an inconsistent object (e.g. two identical cards)."""


class CapacityError(SetlabError):
    """An exhaustive routine was asked to handle an instance above its guard."""


class ParseError(SetlabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
