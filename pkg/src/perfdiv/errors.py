"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PerfdivError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(PerfdivError, ValueError):
    pass


class CapacityError(PerfdivError):
    """A size guard was exceeded (vertex cap, cost guard)."""


class Graph6Error(PerfdivError, ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PreconditionError(PerfdivError, ValueError):
    """Input does not satisfy the documented preconditions of an operation."""


class DomainError(PreconditionError):
    """A predicate was called outside the graph class where it is meaningful."""


class StructureViolation(PerfdivError):
    """A structural claim that a constructive routine relies on failed.

    ``claim`` names the failed step and ``vertices`` lists the offending
    vertices. Seeing one of these on valid input is a finding, not a bug to
    paper over.
    """

    def __init__(self, claim: str, vertices=()):
        self.claim = claim
        self.vertices = tuple(vertices)
        super().__init__(f"{claim}: {list(self.vertices)}")


class NotPerfectlyDivisibleError(PerfdivError):
    """Raised when no perfect-division partition exists for some induced subgraph."""

    def __init__(self, subgraph, vertices=()):
        self.subgraph = subgraph
        self.vertices = tuple(vertices)
        super().__init__(
            f"induced subgraph on {list(self.vertices)} ({subgraph.n} vertices) "
            "has no perfect-division partition"
        )
