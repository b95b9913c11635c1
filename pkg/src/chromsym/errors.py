"""Exception types shared across the package."""


class ChromsymError(Exception):
    """Base class for chromsym-specific errors."""


class WeightMismatch(ChromsymError):
    """Two partitions (or a composition and a graph) have different weights."""


class VertexOutOfRange(ChromsymError):
    """A vertex index does not belong to the graph."""


class InvalidSize(ChromsymError):
    """A generator or operation received an out-of-range size parameter."""


class GraphTooLarge(ChromsymError):
    """The 64-vertex cap of the bit-row representation would be exceeded."""


class InvalidPoset(ChromsymError):
    """A relation violates the reflexive/antisymmetric/transitive axioms."""


class CountOverflow(ChromsymError):
    """An exact count does not fit in a signed 64-bit counter."""


class OracleTooLarge(ChromsymError):
    """The brute-force coloring oracle refuses inputs beyond its size guard."""


class NegativeCoefficient(ChromsymError):
    """An expansion required to be nonnegative has a negative coefficient."""


class NotClawFree(ChromsymError):
    """An induced claw obstructs an operation that needs claw-freeness."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class TypeMismatch(ChromsymError):
    """A stable partition does not have the block-size type the caller declared."""


class EmptyWord(ChromsymError):
    """The odd-path word is empty, so no swap position exists."""
