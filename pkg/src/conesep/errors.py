"""Exception hierarchy shared by all conesep modules."""


class ConesepError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(ConesepError):
    """Operands live in different ambient dimensions."""


class DegenerateInput(ConesepError):
    """An input set is empty where a nonempty one is required."""


class ZeroFunctional(ConesepError):
    """A nonzero linear functional is required."""


class NotSymmetric(ConesepError):
    """A vertex set that must be symmetric (v in S iff -v in S) is not."""


class OriginNotInterior(ConesepError):
    """The origin is not interior to a ball that must absorb the space."""


class EmptyFamily(ConesepError):
    """A nonempty finite family is required."""


class BadOrder(ConesepError):
    """Polygonal gauge order is below the minimum."""


class NotSolid(ConesepError):
    """A solid (nonempty interior) set is required."""


class DimensionTooLarge(ConesepError):
    """Guard against combinatorial blow-up in facet/vertex enumeration."""


class UnboundedPolyhedron(ConesepError):
    """Vertex enumeration was asked for an unbounded feasible set."""


class NotNormlike(ConesepError):
    """The gauge vanishes on a nonzero cone direction, so the cone has no
    normlike base under it (only a seminorm-base)."""


class NotPointed(ConesepError):
    """A pointed cone is required."""


class NoPositiveInfimum(ConesepError):
    """The functional's minimum over the base polytope is not positive."""


class BadEpsilon(ConesepError):
    """Shrink amount outside the admissible interval (0, alpha]."""


class NontrivialityViolated(ConesepError):
    """A cone equal to {0} or to the whole space where a nontrivial one is
    required."""


class UnsupportedOverlap(ConesepError):
    """Cone pieces overlap non-facially in dimension >= 3; boundary
    extraction declines rather than guessing."""


class HypothesisFailed(ConesepError):
    """A separation theorem's hypothesis does not hold; carries the report."""

    def __init__(self, report, message="separation hypothesis failed"):
        super().__init__(message)
        self.report = report


class InternalCertificateError(ConesepError):
    """An internally produced certificate failed its own re-verification.
    Indicates a defect, never expected in normal operation."""


class InstanceParseError(ConesepError):
    """Instance JSON is malformed; names the offending field."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
        self.detail = message
