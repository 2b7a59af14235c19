"""Exception types shared across the package.

Graph-structure problems raise MalformedGraph (the input does not even
resolve into a graph) or InvalidGraph (it resolves but violates a
validation rule).  The assignment sweep and the mesh front-end each have
their own small families below.
"""


class ReeboundError(Exception):
    """Base class for all errors raised by this package."""


class MalformedGraph(ReeboundError):
    """Edge endpoints reference missing vertices, duplicate ids, or
    non-finite levels: the payload is not a graph at all."""


class InvalidGraph(ReeboundError):
    """A structurally well-formed graph failed validation.

    Carries the full report in ``self.report``.
    """

    def __init__(self, report):
        self.report = report
        rules = sorted({v.rule for v in report.violations})
        super().__init__("graph failed validation: %s" % ", ".join(rules))


class NonGenericCut(ReeboundError):
    """A restriction window boundary passes exactly through an interior
    vertex; nudge the window."""


class EmptyWindow(ReeboundError):
    """No edge of the graph meets the open restriction window."""


# -- integer-assignment sweep ------------------------------------------------

class NoLowerBoundary(ReeboundError):
    """The essential subgraph has no lower-boundary vertex to seed from."""


class NoUpperBoundary(ReeboundError):
    """The essential subgraph has no upper-boundary vertex, so no distance
    bound can be read off."""


class ConflictingPropagation(ReeboundError):
    """Copying across a valency-two vertex would contradict an integer that
    is already in place; the input graph is not in the supported class."""


class UnassignedFrontier(ReeboundError):
    """An edge spanning the probe level just left of the active vertex has
    no integer yet, so the frontier cannot be classified."""


class NonConsecutiveFrontier(ReeboundError):
    """The integers on the frontier are neither all equal nor two
    consecutive values; valid inputs never produce this."""


class NothingToAssign(ReeboundError):
    """All edges already carry integers."""


class BrokenUniqueness(ReeboundError):
    """An unassigned edge exists strictly left of the sweep target, which
    valid inputs cannot produce."""


class IncompleteAssignment(ReeboundError):
    """A complete assignment was required but some edge has no integer."""


class InvariantViolation(ReeboundError):
    """A mid-run consistency check failed; ``self.report`` holds details."""

    def __init__(self, report):
        self.report = report
        rules = sorted({v.rule for v in report.violations})
        super().__init__("assignment invariants violated: %s" % ", ".join(rules))


# -- mesh front-end ----------------------------------------------------------

class NotAManifold(ReeboundError):
    """The triangle set is not a closed connected 2-manifold."""


class NotOrientable(ReeboundError):
    """The triangles admit no consistent orientation."""


class DegenerateField(ReeboundError):
    """The scalar field is unusable: non-finite values, a monkey saddle
    (subdivide the mesh around it), or coinciding critical values."""


class OpenCycle(ReeboundError):
    """A level cycle does not close up."""


class MissingWitness(ReeboundError):
    """An edge has no witness cycle to classify."""


class GenerationFailed(ReeboundError):
    """Random graph generation was asked for parameters outside the
    supported range, or could not satisfy its constraints."""


class ParseError(ReeboundError):
    """A mesh, field, or JSON payload could not be parsed."""
