"""Exception hierarchy shared by every module of the package."""


class DrinfeldError(Exception):
    """Base class for all errors raised by this package."""


# finite fields
class NonPrime(DrinfeldError, ValueError):
    pass


class ReducibleModulus(DrinfeldError, ValueError):
    pass


class UnsupportedSize(DrinfeldError, ValueError):
    pass


class DivisionByZero(DrinfeldError, ZeroDivisionError):
    pass


# polynomials and rational functions
class ZeroPolynomial(DrinfeldError, ValueError):
    pass


class ZeroArgument(DrinfeldError, ValueError):
    pass


class NotIrreducible(DrinfeldError, ValueError):
    """A finite place was requested for a polynomial that is not monic irreducible."""


# twisted polynomials
class BothZero(DrinfeldError, ValueError):
    pass


class NotNormalizable(DrinfeldError, ValueError):
    """The constant coefficient is zero, so no normalized generator exists."""


class DependentPoints(DrinfeldError, ValueError):
    pass


class ZeroPoint(DrinfeldError, ValueError):
    pass


# Drinfeld modules and kernels
class NotStable(DrinfeldError, ValueError):
    pass


class DifferentModules(DrinfeldError, ValueError):
    pass


class StabilityViolated(DrinfeldError, RuntimeError):
    pass


class NotContained(DrinfeldError, ValueError):
    pass


class WrongRank(DrinfeldError, ValueError):
    pass


class InvalidModule(DrinfeldError, ValueError):
    pass


# polygons and heights
class NotSeparable(DrinfeldError, ValueError):
    pass


class ConstantPolynomial(DrinfeldError, ValueError):
    pass


class InfinitePlace(DrinfeldError, ValueError):
    pass


class UnsupportedPlace(DrinfeldError, ValueError):
    pass


class NotNormalized(DrinfeldError, ValueError):
    pass


class NotStableAt(DrinfeldError, ValueError):
    def __init__(self, place, message=None):
        self.place = place
        super().__init__(message or f"not stable at place {place}")


# lattices
class RankMismatch(DrinfeldError, ValueError):
    pass


class SingularMatrix(DrinfeldError, ValueError):
    pass


# parsing
class ExpressionSyntaxError(DrinfeldError, ValueError):
    def __init__(self, message, line=1, col=1):
        self.line = line
        self.col = col
        super().__init__(f"{message} at line {line}, column {col}")
