"""Exception hierarchy shared by every numerical routine in the package."""


class HermiteMultisectError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HermiteMultisectError, ValueError):
    """An argument lies outside the validated domain of an operation."""


class DivergenceError(DomainError):
    """The requested series does not converge for the given input."""


class SingularityError(DomainError):
    """The closed form is evaluated too close to a pole or branch point."""


class NumericalOverflowError(HermiteMultisectError, OverflowError):
    """A non-finite value appeared during evaluation."""


class TruncationError(HermiteMultisectError, ArithmeticError):
    """A series did not meet its stopping criterion within ``max_terms``.

    The partial sum and the number of consumed terms are kept on the
    exception so callers can still inspect how far the summation got.
    """

    def __init__(self, message, partial=0j, terms_used=0):
        super().__init__(message)
        self.partial = partial
        self.terms_used = terms_used
