"""Exception hierarchy shared by all modules."""


class MultiheadError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(MultiheadError):
    """Malformed or out-of-range user input (CLI exit code 2)."""


class UndefinedStatisticError(MultiheadError):
    """A statistic is undefined for the given state (e.g. Mandel Q at zero amplitude)."""


class InternalConsistencyError(MultiheadError):
    """A quantity that must be real carried an imaginary residue above tolerance.

    This signals a formula transcription bug, not a user error.
    """


class TruncationError(MultiheadError):
    """The requested Fock cutoff discards more probability mass than allowed."""


class CutoffInsufficientError(TruncationError):
    """An operator application pushed significant amplitude past the cutoff."""


class CapacityError(MultiheadError):
    """The computation would exceed the configured resource limits (CLI exit code 3)."""
