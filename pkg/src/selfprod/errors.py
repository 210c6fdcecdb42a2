"""Exception types shared by the library and the command line front end."""


class SelfProdError(Exception):
    """Base class for all errors raised by :mod:`selfprod`."""


class DomainError(SelfProdError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class PreconditionError(SelfProdError, ValueError):
    """A supporting input (usually a prime table) is too small for the request."""


class ResourceCapError(SelfProdError, MemoryError):
    """The request would exceed a configured memory cap."""
