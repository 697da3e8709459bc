"""Exception hierarchy shared by every module of the package."""


class HeckeMacError(Exception):
    """Base class for all errors raised by heckemac."""


class ZeroDenominator(HeckeMacError, ZeroDivisionError):
    pass


class NotDivisible(HeckeMacError, ArithmeticError):
    pass


class NonPolynomialResult(NotDivisible):
    """A value expected to be a Laurent polynomial carries a genuine denominator."""


class CellOutOfRange(HeckeMacError, IndexError):
    pass


class SizeMismatch(HeckeMacError, ValueError):
    pass


class DegreeMismatch(SizeMismatch):
    pass


class IndexOutOfRange(HeckeMacError, IndexError):
    pass


class BadComposition(HeckeMacError, ValueError):
    pass


class RankMismatch(HeckeMacError, ValueError):
    pass


class InconsistentPropagation(HeckeMacError, RuntimeError):
    pass


class SingularSystem(HeckeMacError, ArithmeticError):
    pass


class InternalMismatch(HeckeMacError, RuntimeError):
    """Two independent routes to the same quantity disagreed."""


class Singular(HeckeMacError, ValueError):
    pass


class ScaleExceeded(HeckeMacError, ValueError):
    pass


class UnsupportedDegree(ScaleExceeded):
    pass


class ParseError(HeckeMacError, ValueError):
    pass
