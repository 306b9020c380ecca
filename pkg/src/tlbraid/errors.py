"""Exception types shared across the package."""


class TLBraidError(Exception):
    """Base class for all tlbraid errors."""


class DimensionMismatchError(TLBraidError, ValueError):
    """Operands have incompatible shapes."""


class CapacityError(TLBraidError, ValueError):
    """Requested object exceeds the dense or structured size cap."""


class DomainError(TLBraidError, ValueError):
    """Parameter outside its admissible domain."""


class BraidSyntaxError(TLBraidError, ValueError):
    """Braid-word text failed to parse.

    `position` is the 0-based character offset of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGateError(TLBraidError, ValueError):
    """Gate name not in the registry."""
