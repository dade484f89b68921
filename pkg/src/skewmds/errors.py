"""Exception hierarchy shared by every module."""


class SkewMdsError(Exception):
    """Base class for all library errors."""


class NotPrime(SkewMdsError):
    pass


class ModulusNotBasicPrimitive(SkewMdsError):
    pass


class BadAutomorphismExponent(SkewMdsError):
    pass


class MixedRings(SkewMdsError):
    pass


class NotAUnit(SkewMdsError):
    pass


class DegreeMismatch(SkewMdsError):
    pass


class NonUnitLeadingCoefficient(SkewMdsError):
    pass


class DivisionByZero(SkewMdsError):
    pass


class DependentRoots(SkewMdsError):
    pass


class DuplicateRoot(SkewMdsError):
    pass


class CharacteristicDividesLength(SkewMdsError):
    pass


class NotMonic(SkewMdsError):
    pass


class DegreeTooSmall(SkewMdsError):
    pass


class NotSquare(SkewMdsError):
    pass


class PreconditionViolated(SkewMdsError):
    pass


class UnsupportedShape(SkewMdsError):
    pass


class CharacteristicMismatch(SkewMdsError):
    pass


class NotNilpotent(SkewMdsError):
    pass


class BaseNotMds(SkewMdsError):
    pass


class RequiresFieldCase(SkewMdsError):
    pass


class BudgetExceeded(SkewMdsError):
    pass


class NotRightDivisor(SkewMdsError):
    pass


class InternalInconsistency(SkewMdsError):
    """A theorem-guaranteed property failed; indicates an implementation bug."""
