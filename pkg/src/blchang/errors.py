"""Exception hierarchy shared by every module."""


class BLError(Exception):
    """Base class for all library errors."""


class DomainError(BLError, ValueError):
    """A value does not belong to the algebra (or group) it was used with."""


class ConstructionError(BLError, ValueError):
    """An algebra, group or morphism could not be built from the given data."""


class ParseError(BLError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedShapeError(BLError):
    """The operation is only defined for a narrower class of algebras."""


class StrategyError(BLError):
    """An equality strategy was used where it is not licensed."""


class MorphismError(BLError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class CapacityError(BLError):
    """A search was refused because its input exceeds the configured cap."""
