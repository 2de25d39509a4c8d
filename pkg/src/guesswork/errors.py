"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An algorithm was invoked on input violating its stated requirements."""


class SpanningError(PreconditionError):
    """The point set does not span the ambient space."""
