"""Exception types shared across the package.

Every error carries a stable ``code`` string; the CLI prints it so callers can
match on failures without parsing messages.
"""


class SemigroupError(ValueError):
    code = "SEMIGROUP_ERROR"


class GcdNotOne(SemigroupError):
    code = "GCD_NOT_ONE"


class NotAMember(SemigroupError):
    code = "NOT_A_MEMBER"


class NoGaps(SemigroupError):
    code = "NO_GAPS"


class NotSpecialGap(SemigroupError):
    code = "NOT_SPECIAL_GAP"


class NotMinimalGenerator(SemigroupError):
    code = "NOT_MINIMAL_GENERATOR"


class IsMinimum(SemigroupError):
    code = "IS_MINIMUM"


class FamilyAxiomViolation(SemigroupError):
    """The supplied family is not a semi-covariety."""

    code = "FAMILY_AXIOM_VIOLATION"


class NoRemovableGenerator(FamilyAxiomViolation):
    code = "NO_REMOVABLE_GENERATOR"


class LimitExceeded(SemigroupError):
    code = "LIMIT_EXCEEDED"


class NotAnFSet(SemigroupError):
    code = "NOT_AN_FSET"


class NotThetaSet(NotAnFSet):
    code = "NOT_THETA_SET"


class EvenFrobenius(SemigroupError):
    code = "EVEN_FROBENIUS"


class ContainsZero(SemigroupError):
    code = "CONTAINS_ZERO"


class OutOfRange(SemigroupError):
    code = "OUT_OF_RANGE"


class BoundExceeded(SemigroupError):
    code = "BOUND_EXCEEDED"
