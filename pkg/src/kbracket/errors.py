"""Exception hierarchy shared across the package.

The CLI maps each class to a distinct exit code, so library code should
raise the most specific one that applies.
"""


class KBracketError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KBracketError):
    """Malformed PD text, corpus file, or chord-word input."""


class NotPlanarError(KBracketError):
    """A PD code whose rotation system fails the sphere Euler count."""


class CapExceeded(KBracketError):
    """An input is larger than the configured safety cap."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class PreconditionFailed(KBracketError):
    """An operation was called on input violating its stated hypothesis."""


class InternalInconsistency(KBracketError):
    """A structural invariant that should hold by construction failed."""


class DegreeUndefinedError(KBracketError, ValueError):
    """Degree query on the zero polynomial."""
