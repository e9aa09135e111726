"""Exceptions shared by the kernels and the public modules."""


class ConvergenceError(ArithmeticError):
    """Eigensolver failed to reach the requested accuracy."""


class PreconditionError(ValueError):
    """Input violates a documented precondition."""
