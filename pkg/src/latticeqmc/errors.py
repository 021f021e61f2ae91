"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on an argument was violated (bad range, wrong kind, ...)."""


class GuardError(RuntimeError):
    """A size or cost guard tripped (problem too large for the requested path)."""
