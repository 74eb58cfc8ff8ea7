"""Exception types shared across the package."""


class SecmodError(Exception):
    """Base class for errors raised by secmod."""


class NotProperError(SecmodError, ValueError):
    """A predicate that needs a proper ideal or submodule got the whole thing."""


class RingMismatchError(SecmodError, ValueError):
    pass


class ParentMismatchError(SecmodError, ValueError):
    pass


class IllDefinedHomError(SecmodError, ValueError):
    """A hom matrix does not respect the relations of its source."""


class BoundExceededError(SecmodError, RuntimeError):
    """An enumeration would exceed its configured size bound."""

    def __init__(self, message: str, partial_count: int | None = None):
        super().__init__(message)
        self.partial_count = partial_count


class ParseError(SecmodError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
