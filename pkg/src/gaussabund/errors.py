"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(RuntimeError):
    """A configured resource bound (oracle size, table size) was exceeded."""


class InconsistencyError(RuntimeError):
    """A computed result contradicts a proved statement."""


class CheckpointError(RuntimeError):
    """A search state file could not be loaded."""
