"""Exception hierarchy shared by every module of the package."""


class NmdsError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(NmdsError, ValueError):
    pass


class NotIrreducible(NmdsError, ValueError):
    pass


class OverflowGuard(NmdsError, ValueError):
    """Field order above the configured bound."""


class DivisionByZero(NmdsError, ZeroDivisionError):
    pass


class MixedFields(NmdsError, TypeError):
    pass


class NotSquare(NmdsError, ValueError):
    pass


class BadDimension(NmdsError, ValueError):
    pass


class DuplicatePoints(NmdsError, ValueError):
    pass


class SingularTailBlock(NmdsError, ValueError):
    pass


class DimensionOutOfRange(NmdsError, ValueError):
    pass


class BudgetExceeded(NmdsError, RuntimeError):
    """Exhaustive enumeration would exceed the configured budget."""


class NonIntegerResult(NmdsError, ArithmeticError):
    """An exact rational computation that must be integral was not."""


class NegativeCount(NmdsError, ArithmeticError):
    pass


class ZeroCode(NmdsError, ValueError):
    pass
