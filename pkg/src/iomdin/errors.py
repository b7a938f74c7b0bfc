"""Exception hierarchy for the graph calculus."""


class IomdinError(Exception):
    """Base class for all domain errors raised by this package."""


class SchemaError(IomdinError):
    """A document does not conform to the input schema."""


class InvalidGammaC(IomdinError):
    """A decorated input graph violates a structural requirement."""


class InadmissibleK(IomdinError):
    """The exponent k is below the admissible range for the input graph."""


class InconsistentMultiplicities(IomdinError):
    """Self-intersections cannot be solved integrally from the multiplicities."""


class NotPlaneCurveGraph(IomdinError):
    """The graph is not an embedded resolution graph of a plane curve."""


class CoveringDataError(IomdinError):
    """Covering data violates the divisibility axiom or a precondition."""
