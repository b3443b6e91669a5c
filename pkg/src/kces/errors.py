class KcesError(ValueError):
    """Base class for errors raised by kces."""


class PreconditionError(KcesError):
    """An input violates a documented precondition."""


class FormatError(KcesError):
    """Malformed serialized input."""
