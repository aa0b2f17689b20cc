"""Exception and warning types raised across the package."""


class InterscalError(ValueError):
    """Base class for input/validation failures (CLI exit status 1)."""


class ReversedBounds(InterscalError):
    def __init__(self, lo, hi, location=None):
        self.lo, self.hi, self.location = lo, hi, location
        where = f" at {location}" if location else ""
        super().__init__(f"interval lower bound {lo!r} exceeds upper bound {hi!r}{where}")


class NonFiniteBound(InterscalError):
    pass


class DimensionMismatch(InterscalError):
    pass


class InvalidInput(InterscalError):
    pass


class NotSymmetric(InterscalError):
    pass


class NoConvergence(InterscalError):
    pass


class NotOrthogonal(InterscalError):
    pass


class DimensionTooLarge(InterscalError):
    pass


class ZeroVariance(InterscalError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"column {column} has zero variance")


class ShapeMismatch(InterscalError):
    pass


class AllNonpositive(InterscalError):
    pass


class IndexOutOfRange(IndexError):
    pass


class ParseError(InterscalError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)


class RankDeficientWarning(UserWarning):
    """Fewer positive eigenvalues than requested dimensions; extra columns are zero."""
