"""Exception hierarchy shared by all posetlab modules."""


class PosetlabError(Exception):
    """Base class for all posetlab errors."""


class CycleError(PosetlabError):
    """The input cover digraph contains a directed cycle."""


class UnknownElement(PosetlabError):
    """A referenced element is not part of the poset."""


class EmptyPoset(PosetlabError):
    """Posets must be non-empty."""


class MissingOmega(PosetlabError):
    """Operation requires a vertex labeling, only edge signs were given."""


class AlreadyComparable(PosetlabError):
    """The two elements are already comparable."""


class UnrealizableSigns(PosetlabError):
    """No vertex bijection induces the given edge-sign map."""


class NotConsistent(PosetlabError):
    """The labeled poset is not sign-consistent."""


class NotParityConsistent(PosetlabError):
    """The poset is not parity consistent."""


class NotGraded(PosetlabError):
    """The labeled poset is not sign-graded."""


class NotSaturated(PosetlabError):
    """The poset is not saturated for its rank function."""


class NotCanonical(PosetlabError):
    """The labeling is not canonical ({0,1} ranks, monotone labels)."""


class BadRankGap(PosetlabError):
    """Ranks of the chosen pair do not differ by exactly one."""


class Comparable(PosetlabError):
    """The chosen pair must be incomparable."""


class DifferentPoset(PosetlabError):
    """Both labelings must live on the same underlying poset."""


class InvalidSize(PosetlabError):
    """Size argument out of range."""


class NotSymmetric(PosetlabError):
    """Polynomial is not symmetric about the requested center."""


class ZeroPolynomial(PosetlabError):
    """Operation undefined for the zero polynomial."""


class NegativeCoefficient(PosetlabError):
    """Polynomial has a negative coefficient where non-negative required."""


class NonIntegerSolution(PosetlabError):
    """Basis conversion did not produce integer coefficients."""


class PreconditionViolated(PosetlabError):
    """A stated precondition does not hold for the input."""


class CapExceeded(PosetlabError):
    """Enumeration would exceed the configured cap."""


class TooLarge(PosetlabError):
    """Exhaustive generation is limited to small sizes."""


class TooManyEdges(PosetlabError):
    """all-epsilon labeling enumeration is limited to few edges."""


class UnknownSuite(PosetlabError):
    """No verification suite with that identifier."""


class ParseError(PosetlabError):
    """Input file could not be parsed."""
