"""Exception hierarchy shared by every module."""


class CatnucError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(CatnucError, TypeError):
    """Scalars from different fields were combined."""


class DimensionError(CatnucError, ValueError):
    """Shapes or ambient dimensions do not agree."""


class InvalidStructureError(CatnucError, ValueError):
    """Input data fails a structural invariant (not a monoid, not a homomorphism, ...)."""


class PreconditionError(CatnucError, ValueError):
    """An operation was called on inputs outside its domain."""


class NotInvertibleError(CatnucError, ArithmeticError):
    """An element that must be invertible is not."""


class InternalConsistencyError(CatnucError, AssertionError):
    """A theorem-backed self-check failed; indicates a bug, not bad input."""
