"""Exception types shared across the toolkit."""


class RobustColorError(Exception):
    """Base class for all toolkit errors."""


class ContractError(RobustColorError):
    """A documented precondition of an operation was violated by the caller."""


class FormatError(RobustColorError):
    """Malformed external input (graph6, embedding text, JSON)."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class StructureError(RobustColorError):
    """A constructed object failed one of its build-time structural checks."""


class ConsistencyError(RobustColorError):
    """Internal cross-check failed; indicates a bug, not bad input."""
