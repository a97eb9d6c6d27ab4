"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph, scheme, map or document."""


class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class ResourceLimitError(RuntimeError):
    """A search or closure exceeded its configured budget."""
