"""Typed errors shared across the package."""


class FmkError(Exception):
    """Base class for all package errors."""


class VariableSpaceError(FmkError, ValueError):
    """Two objects live in different variable spaces (x vs zeta vs y ...)."""


class DegreeMismatchError(FmkError, ValueError):
    """Operands were required to have equal homogeneous degree."""


class SizeMismatchError(FmkError, ValueError):
    """Matrix or vector dimensions do not match."""


class FiberError(FmkError, ValueError):
    """A Lie algebra element lies outside the block the fiber action expects."""


class UnsupportedRankError(FmkError, ValueError):
    """The requested rank n is outside the validity range of the formula."""


class ConsistencyError(FmkError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad user input."""
