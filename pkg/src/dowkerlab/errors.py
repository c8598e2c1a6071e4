"""Exception hierarchy shared by every module in the package."""


class DowkerError(Exception):
    """Base class for all errors raised by dowkerlab."""


class DuplicateLabel(DowkerError, ValueError):
    pass


class UnknownLabel(DowkerError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotAMorphism(DowkerError, ValueError):
    """Raised when a pair of label maps violates the morphism condition.

    ``pair`` holds the first source pair (x, y) whose image is not related.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class SourceTargetMismatch(DowkerError, ValueError):
    pass


class UnknownVertex(DowkerError, ValueError):
    pass


class NotSimplicial(DowkerError, ValueError):
    def __init__(self, message, facet=None):
        super().__init__(message)
        self.facet = facet


class NotASimplex(DowkerError, ValueError):
    pass


class EmptyCover(DowkerError, ValueError):
    pass


class DimensionGuard(DowkerError, RuntimeError):
    """A complex is too large to enumerate at chain level."""


class TooLarge(DowkerError, ValueError):
    pass


class NotInvertible(DowkerError, ArithmeticError):
    pass


class ParseError(DowkerError, ValueError):
    """Malformed relation input; the message names the offending line or field."""
