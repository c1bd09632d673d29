"""Exception types shared across the package."""


class InvalidTypeError(ValueError):
    """A Dynkin type label is malformed or its rank is out of range."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class InvariantFailureError(RuntimeError):
    """A computation contradicts a structural fact it is built on.

    Seeing this exception means the implementation (or the classification
    it relies on) is wrong, not the caller.
    """
