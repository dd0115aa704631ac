"""Exception types shared by every module of the package."""


class PolwalkError(Exception):
    """Base class for all errors raised by polwalk."""


class InputError(PolwalkError, ValueError):
    """Malformed input: unknown dart, bad permutation, unparsable text, ..."""


class NotAPolarizationError(InputError):
    """A face list whose induced vertex permutation is not a single cycle."""


class StructuralError(PolwalkError):
    """The graph has the wrong shape for the request (e.g. it is disconnected)."""


class PreconditionError(PolwalkError):
    """An operation was called outside its domain (e.g. no complete walk)."""


class InternalError(PolwalkError, AssertionError):
    """A check that should hold by construction failed."""
