"""Error taxonomy shared by the library, the service and the CLI."""


class PonceletError(Exception):
    """Base class for all library errors."""


class InvalidInputError(PonceletError):
    """Malformed or out-of-contract input (bad dimensions, bad parameters)."""


class DimensionError(InvalidInputError):
    """Shape mismatch: non-square determinant, wrong arity, wrong degree."""


class DegenerateInputError(PonceletError):
    """Structurally valid input that collapses the construction.

    Examples: linearly dependent sections, repeated roots, a singular
    change of variables, an identically zero determinant.
    """
