"""Exception hierarchy shared by all modules."""


class BracketMomentsError(Exception):
    """Base class for every error raised by this package."""


class DivisionByZero(BracketMomentsError, ZeroDivisionError):
    pass


class PrecisionLost(BracketMomentsError):
    """A Laurent coefficient was requested beyond the order it is known to."""


class UncancelledPole(BracketMomentsError):
    """A regularized quantity kept a pole where a finite value was required."""


class NonTerminating(BracketMomentsError):
    pass


class Divergent(BracketMomentsError):
    pass


class Unsupported(BracketMomentsError):
    pass


class InvalidParam(BracketMomentsError, ValueError):
    pass


class OutOfRange(InvalidParam):
    pass


class NonIntegrable(BracketMomentsError, ValueError):
    pass


class SingularBracket(BracketMomentsError):
    pass


class SingularMatrix(BracketMomentsError):
    pass


class NegativeIndex(BracketMomentsError):
    pass
