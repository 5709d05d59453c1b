"""Exception hierarchy shared across the package."""

from __future__ import annotations


class LinquotError(ValueError):
    """Base class for all domain errors raised by this package."""


class ContextMismatchError(LinquotError):
    """Two monomials from rings with different variable counts were combined."""


class GraphError(LinquotError):
    """Invalid graph construction input."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same unordered edge appears twice."""


class VertexIndexError(GraphError):
    """An edge endpoint is outside the declared vertex range."""


class FamilyParameterError(LinquotError):
    """A named graph family was requested with out-of-range parameters."""


class DuplicateGeneratorError(LinquotError):
    """An ordering contains a repeated monomial outside repetition mode."""


class NonLinearOrderingError(LinquotError):
    """An operation that requires linear quotients was given an ordering
    without them.  ``position`` is the first failing position (1-based)."""

    def __init__(self, position: int, message: str | None = None):
        self.position = position
        super().__init__(message or f"ordering is not a linear quotient ordering "
                                    f"(first failure at position {position})")


class OracleBudgetError(LinquotError):
    """A brute-force verification was asked for an instance beyond its budget."""


class LiftError(LinquotError):
    """No lift was found while assembling a mapping cone.  Exactness
    guarantees a lift exists, so this always signals an internal bug."""
