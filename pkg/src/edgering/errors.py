"""Exception taxonomy shared by the whole package.

Every failure mode the library can signal maps to exactly one of these
classes, so callers (and the CLI exit-code table) can dispatch on type.
"""


class EdgeRingError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EdgeRingError):
    """Malformed caller input: bad vertex index, self-loop, bad file."""


class GraphFileError(InputError):
    """Parse error in a graph file; carries the 1-based line number."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class NonBipartiteError(EdgeRingError):
    """Graph contains an odd cycle where a bipartition is required."""


class ContractError(EdgeRingError):
    """A documented precondition was violated, or an internal invariant
    that the theory guarantees failed to hold (a library bug or misuse)."""


class CapacityError(EdgeRingError):
    """A configured enumeration or memory budget was exceeded."""


class ComputationError(EdgeRingError):
    """A numeric consistency check failed (e.g. the Hilbert numerator
    window produced a negative or non-vanishing tail coefficient)."""


class GenerationError(EdgeRingError):
    """A random-graph retry budget was exhausted."""
