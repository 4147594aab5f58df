class SemigrassError(Exception):
    """Base class for every error raised by semigrass."""


# Input errors: the caller asked for something that does not exist.


class NonPrime(SemigrassError, ValueError):
    pass


class DegreeOutOfRange(SemigrassError, ValueError):
    pass


class SpecMismatch(SemigrassError, ValueError):
    pass


class DivisionByZero(SemigrassError, ZeroDivisionError):
    pass


class AmbientMismatch(SemigrassError, ValueError):
    pass


class NotASubspace(SemigrassError, ValueError):
    pass


class TooLarge(SemigrassError, ValueError):
    pass


class Singular(SemigrassError, ValueError):
    pass


class PatternOutOfRange(SemigrassError, ValueError):
    pass


class WindowTooSmall(SemigrassError, ValueError):
    pass


class PreconditionViolated(SemigrassError, ValueError):
    pass


class ParameterOutOfRange(SemigrassError, ValueError):
    pass


class LowerParameterPole(SemigrassError, ValueError):
    pass


# Internal errors: a consistency check failed. None of these should ever fire.


class NoIrreducibleFound(SemigrassError, RuntimeError):
    pass


class NotAnInteger(SemigrassError, RuntimeError):
    pass


class ChartSearchExhausted(SemigrassError, RuntimeError):
    pass


class NonTerminating(SemigrassError, RuntimeError):
    pass


class InvariantViolated(SemigrassError, RuntimeError):
    pass
