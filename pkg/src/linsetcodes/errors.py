"""Exception hierarchy shared by all modules."""


class LinsetError(Exception):
    """Base class for every error raised by this package."""


class NonPrime(LinsetError):
    """The characteristic passed to build_field is not a prime."""


class Reducible(LinsetError):
    """A user-supplied defining polynomial is not irreducible (or malformed)."""


class NotADivisor(LinsetError):
    """Relative norm/trace requested for an exponent that does not divide n."""


class ContextMismatch(LinsetError):
    """Operands belong to different field contexts."""


class ZeroVector(LinsetError):
    """The zero tuple has no projective canonical form."""


class MinWeightNotOne(LinsetError):
    """Operation requires a linear set whose minimum point weight is 1."""


class NoMatchingCase(LinsetError):
    """No closed-form enumerator case applies to the given profile."""


class TooLarge(LinsetError):
    """Exhaustive enumeration would exceed the hard size guard."""


class DegenerateSpan(LinsetError):
    """Point set does not span the plane, so no 3-dimensional code exists."""


class BudgetExceeded(LinsetError):
    """Search space exceeds the configured enumeration budget."""


class HypothesisViolation(LinsetError):
    """Inputs violate the hypothesis of the theorem the caller invoked."""


class GcdViolation(LinsetError):
    """A gcd side condition of a family constructor fails."""


class NormViolation(LinsetError):
    """A norm side condition of a family constructor fails."""


class ConditionViolation(LinsetError):
    """A family side condition fails; the message names the condition."""


class FactorizationMismatch(LinsetError):
    """Family parameters r, t do not factor the extension degree n."""


class ClaimViolation(LinsetError):
    """A constructed object fails the structural claim attached to it."""
