"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad dimensions, non-finite coordinates, bad JSON."""


class DomainError(ValueError):
    """Mathematically invalid request (trivial action, non-cocycle, ...)."""
