class PreconditionError(ValueError):
    """An argument violates an operation's stated precondition."""


class InconsistencyError(ArithmeticError):
    """A closed form produced a value it never should (non-integral, negative, ...)."""
