"""Exception hierarchy shared by all modules."""


class ActivelatError(Exception):
    """Base class for errors raised by this package."""


class MalformedInputError(ActivelatError, ValueError):
    """An element index or argument is outside its allowed range."""


class NotAMatroidError(ActivelatError, ValueError):
    """A basis family violates the matroid axioms."""


class ParseError(ActivelatError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceededError(ActivelatError, RuntimeError):
    """A configured size cap (bases, faces, ground set) was exceeded."""


class NotSpanningError(ActivelatError, ValueError):
    pass


class MissingBoundsError(ActivelatError, ValueError):
    pass


class InvalidCoverError(ActivelatError, ValueError):
    pass


class OrderConflictError(ActivelatError, AssertionError):
    """Two bases are ordered oppositely by the external and internal orders.

    The ``pair`` attribute holds the witnessing bases.
    """

    def __init__(self, message, pair):
        self.pair = pair
        super().__init__(message)
