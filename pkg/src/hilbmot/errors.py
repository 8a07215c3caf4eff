"""Exception hierarchy shared by every module."""


class MotiveError(Exception):
    """Base class. ``boundary`` marks errors that signal a data/domain edge."""

    boundary = False


class NotDivisible(MotiveError):
    pass


class NegativeExponent(MotiveError):
    pass


class OrderMismatch(MotiveError):
    pass


class NonUnitConstant(MotiveError):
    pass


class NonzeroConstant(MotiveError):
    pass


class UnknownStratum(MotiveError):
    """Raised when a computation needs a Y-class with no known closed form."""

    boundary = True


class OutOfRange(MotiveError):
    boundary = True


class ResourceLimit(MotiveError):
    boundary = True
