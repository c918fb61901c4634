"""Exception hierarchy for the soqc package.

``PreconditionError`` subclasses signal that a caller violated a documented
precondition (CLI exit code 2).  ``SearchExhausted`` means an exhaustive
search honestly found nothing (exit 3).  ``BudgetExceeded`` means an
enumeration would exceed the codeword budget (exit 4).
"""


class SoqcError(Exception):
    """Base class for all soqc errors."""


class PreconditionError(SoqcError, ValueError):
    """A documented precondition was violated by the caller."""


# field construction and arithmetic

class NonPrimeCharacteristic(PreconditionError):
    pass


class ReducibleModulus(PreconditionError):
    pass


class FieldMismatch(PreconditionError):
    pass


class DivisionByZero(SoqcError, ZeroDivisionError):
    pass


class InvalidBaseOrder(PreconditionError):
    pass


class OddCharacteristic(PreconditionError):
    pass


class ZeroInput(PreconditionError):
    pass


class NotInBaseField(PreconditionError):
    pass


class NoRegisteredEmbedding(PreconditionError):
    pass


class NotAnExtensionField(PreconditionError):
    pass


# linear algebra

class DimensionMismatch(PreconditionError):
    pass


class RaggedRows(PreconditionError):
    pass


# codes

class LengthMismatch(PreconditionError):
    pass


class ZeroTwistEntry(PreconditionError):
    pass


class NoNonzeroCodeword(SoqcError):
    """The zero code has no minimum distance."""


class BudgetExceeded(SoqcError):
    """An exhaustive enumeration would exceed the codeword budget."""


class SearchExhausted(SoqcError):
    """An exhaustive search completed without finding a witness."""


# generalized Reed-Solomon pipelines

class RepeatedPoints(PreconditionError):
    pass


class DimensionTooLarge(PreconditionError):
    pass


# elliptic curves

class SingularCurve(PreconditionError):
    pass


class DuplicatePoints(PreconditionError):
    pass


class InfinityInSupport(PreconditionError):
    pass


class DegreeOutOfRange(PreconditionError):
    pass


# quantum parameter derivation

class NotSelfOrthogonal(PreconditionError):
    pass


class DualDistanceMismatch(SoqcError):
    """Caller-supplied dual distance disagrees with exhaustive recomputation."""


class DomainError(PreconditionError):
    pass


class NotASquare(PreconditionError):
    pass
