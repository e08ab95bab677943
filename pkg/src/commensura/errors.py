"""Exception types shared across the package."""


class CommensuraError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedFamily(CommensuraError):
    pass


class DimensionMismatch(CommensuraError):
    pass


class NonZeroTrace(CommensuraError):
    pass


class BadPrime(CommensuraError):
    pass


class DegreeTooLarge(CommensuraError):
    pass


class ZeroBase(CommensuraError):
    pass


class NotSemisimple(CommensuraError):
    pass


class FiniteOrder(CommensuraError):
    pass


class PrecisionExhausted(CommensuraError):
    pass


class RamifiedPrime(CommensuraError):
    pass


class NotPalindromic(CommensuraError):
    pass


class NotSquarefree(CommensuraError):
    pass


class BudgetExhausted(CommensuraError):
    pass


class UnsupportedGroup(CommensuraError):
    pass


class HypothesisViolated(CommensuraError):
    pass


class NotGeneric(CommensuraError):
    pass


class NotHyperbolic(CommensuraError):
    pass


class ZeroVector(CommensuraError):
    pass


class BadDimension(CommensuraError):
    pass


class RootAtOne(CommensuraError):
    pass


class ValidationError(CommensuraError):
    """Raised for malformed problem files; carries a human-readable location."""
