"""Exception hierarchy shared by every module.

Anything derived from :class:`DomainError` is a user-facing failure (bad
input, failed validation) and maps to exit code 1 in the command line tool.
"""


class DomainError(ValueError):
    pass


class NotPrimeError(DomainError):
    def __init__(self, value):
        super().__init__(f"{value} is not prime")
        self.value = value


class ContextError(DomainError):
    """Two polynomials built over different variable lists were combined."""


class DivisibilityError(ArithmeticError):
    """An exact division by p left a remainder.

    This can only happen for a composite p or an invalid Frobenius lift, so it
    is deliberately *not* a DomainError: it signals a broken invariant.
    """


class ParseError(DomainError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
