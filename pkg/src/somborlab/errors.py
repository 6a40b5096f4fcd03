"""Exception types raised across the package.

Everything inherits from ValueError so callers (and the CLI) can treat any
bad-input condition uniformly while tests can still pin the precise class.
"""


class OutOfRange(ValueError):
    """A vertex index is not in 0..n-1."""


class SelfLoop(ValueError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(ValueError):
    """The same unordered edge appears twice."""


class Disconnected(ValueError):
    """The graph is not connected where connectivity is required."""


class Acyclic(ValueError):
    """The graph has no cycle (girth is undefined)."""


class NotUnicyclic(ValueError):
    """The graph is not connected with exactly n edges."""


class TooLarge(ValueError):
    """Instance exceeds the configured size cap for an exhaustive routine."""


class TooSmall(ValueError):
    """A size parameter is below the smallest meaningful value."""


class InvalidParameters(ValueError):
    """A parameter combination violates a constructor's constraints."""


class InvalidDegree(ValueError):
    """A degree argument is not a positive integer."""


class NotAnEdge(ValueError):
    """The named vertex pair is not an edge of the graph."""


class DegreeTooLow(ValueError):
    """An endpoint's degree is too small for the requested rewiring."""


class CommonNeighbor(ValueError):
    """The two endpoints share a neighbor, so merging them would collapse edges."""


class RemovalMissing(ValueError):
    """An edge scheduled for removal is not present."""


class AdditionExists(ValueError):
    """An edge scheduled for addition is already present."""


class EmptyClass(ValueError):
    """No graph satisfies the requested enumeration filter."""


class OutOfTheoremRange(ValueError):
    """(n, d) falls outside the range where an extremal prediction exists."""


class UnknownConstant(ValueError):
    """No catalog entry under the given identifier."""


class BadGrid(ValueError):
    """A grid specification is empty, unordered, or escapes the valid domain."""
