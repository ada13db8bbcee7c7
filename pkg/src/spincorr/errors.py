"""Exception types shared across the package."""


class SpincorrError(Exception):
    """Base class for all spincorr errors."""


class InvalidQuantumNumberError(SpincorrError, ValueError):
    """A quantum number violates integrality or range constraints."""


class ConstraintError(SpincorrError, ValueError):
    """A semantic constraint (length, triangle rule, n bound) is violated."""


class BudgetExceededError(SpincorrError, RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class DegeneratePriorsError(SpincorrError, ArithmeticError):
    """Every signed path count vanished; the probability table is undefined."""
