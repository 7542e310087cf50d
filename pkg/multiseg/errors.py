from typing import Union


class MultisegmentError(Exception):
    """Base class for every error raised by the multisegment toolkit."""

    pass


class ParseError(MultisegmentError):
    """Exception raised when multisegment or weight text does not follow the grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CosetError(MultisegmentError):
    """Exception raised when integer and half-integer endpoints are mixed."""

    pass


class SegmentBoundsError(MultisegmentError):
    """Exception raised when a segment's base lies above its end."""

    pass


class EmptyMultisegmentError(MultisegmentError):
    """Exception raised when an operation needs at least one segment."""

    pass


class SegmentIndexError(MultisegmentError, IndexError):
    """Exception raised when an action refers to a segment index that does not exist."""

    pass


class NegativeMultiplicityError(MultisegmentError):
    """Exception raised when a rank triangle does not come from any multisegment."""

    def __init__(self, i2: int, j2: int, multiplicity: int) -> None:
        super().__init__(
            f"negative multiplicity {multiplicity} for segment "
            f"[{_half(i2)},{_half(j2)}]"
        )
        self.i2 = i2
        self.j2 = j2
        self.multiplicity = multiplicity


class CapExceededError(MultisegmentError):
    """Exception raised when a search would grow beyond its configured cap."""

    def __init__(self, what: str, limit: int, requested: int) -> None:
        super().__init__(f"{what} {requested} exceeds the cap of {limit}")
        self.limit = limit
        self.requested = requested


class ConfigurationError(MultisegmentError):
    """Exception raised when an environment setting cannot be read."""

    pass


class UsageError(MultisegmentError):
    """Exception raised when the command line itself is malformed."""

    pass


class PropertyViolation(MultisegmentError):
    """Exception raised when a checked invariant fails, carrying the reproducing input."""

    def __init__(self, message: str, reproducer: Union[str, None] = None) -> None:
        super().__init__(message)
        self.reproducer = reproducer


def _half(twice: int) -> str:
    return str(twice // 2) if twice % 2 == 0 else f"{twice}/2"
