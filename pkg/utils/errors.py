"""
Error Hierarchy

Every failure raised by the library derives from ToricCodeError and carries
the process exit code the command line maps it to.
"""


class ToricCodeError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InputError(ToricCodeError):
    """Malformed or inconsistent input (exit code 2)."""

    exit_code = 2


class DimensionMismatchError(InputError):
    """Operands live in lattices of different rank."""


class NotFullDimensionalError(InputError):
    """A facet representation was requested for a lower-dimensional polytope."""


class UnboundedRegionError(InputError):
    """A halfspace system does not define a bounded region."""


class EmptyRegionError(InputError):
    """A halfspace system defines the empty set."""


class DegeneratePolytopeError(InputError):
    """An operation needs positive area/volume and got a degenerate polytope."""


class FieldError(InputError):
    """Invalid field specification or illegal field operation."""


class GuardExceededError(ToricCodeError):
    """A configured size guard would be exceeded (exit code 3)."""

    exit_code = 3

    def __init__(self, guard: str, value: int, limit: int):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(f"guard '{guard}' exceeded: {value} > {limit}")


class OutputError(ToricCodeError):
    """Result could not be written (exit code 4)."""

    exit_code = 4


class InternalInvariantError(ToricCodeError):
    """A mathematically guaranteed property failed to hold (exit code 5)."""

    exit_code = 5
