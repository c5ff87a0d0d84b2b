"""Exceptions shared across the library."""


class CapExceeded(RuntimeError):
    """A closure would grow past the configured element cap."""

    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"closure exceeds the element cap of {cap}")


class NotDiagonal(ValueError):
    """An operation restricted to diagonal matrices received a non-diagonal one."""


class NotClosed(ValueError):
    """An element set expected to be a group is not closed under multiplication."""


class SubNotContained(ValueError):
    """A claimed subgroup contains elements outside the parent group."""


class UnstableDedup(RuntimeError):
    """Two numerically distinct matrices fell within the dedup safety margin."""
