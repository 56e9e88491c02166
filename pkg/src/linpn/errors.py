"""Exception types shared across the package."""


class LinPNError(Exception):
    """Base class for all errors raised by linpn."""


class DimensionError(LinPNError, ValueError):
    """Operands have incompatible sizes."""


class DegenerateError(LinPNError, ValueError):
    """A matrix that must be invertible is singular (e.g. a degenerate 2-cocycle)."""


class StructureError(LinPNError, ValueError):
    """Input data violates a structural requirement (antisymmetry, Jacobi, cocycle, ...)."""


class PreconditionError(LinPNError, ValueError):
    """An operation was called on data outside its domain."""
