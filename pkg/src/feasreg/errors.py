"""Exception hierarchy shared by all modules."""


class FeasRegError(Exception):
    """Base class for package errors."""


class DomainError(FeasRegError, ValueError):
    """An argument is outside the documented domain of an operation."""


class CapabilityError(FeasRegError, RuntimeError):
    """The request exceeds a configured size cap (not a math error)."""


class ConstructionError(FeasRegError, ValueError):
    """A parameterized graph construction is infeasible at the given size."""
