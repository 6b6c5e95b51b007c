"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DiptychError(Exception):
    """Base class for all errors raised by the library."""


class InputError(DiptychError):
    """Malformed or ill-typed input data."""


class TargetMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class NotCommuting(InputError):
    pass


class OutOfUniverse(DiptychError):
    """A construction leaves the enumerated (truncated) universe."""


class SizeLimitExceeded(DiptychError):
    pass


class NoTerminalObject(DiptychError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotMonotone(InputError):
    pass


class NotInjective(InputError):
    pass


class NotSurjective(InputError):
    pass


class InvalidRelation(InputError):
    pass


# groupoids

class GroupoidError(InputError):
    pass


class NotInjectiveUnit(GroupoidError):
    pass


class NotSurjectiveSource(GroupoidError):
    pass


class DivisionIllTyped(GroupoidError):
    pass


class AxiomViolation(GroupoidError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownBaseElement(InputError):
    pass


class NotACover(InputError):
    pass


class NotAnAction(InputError):
    pass


class NotNormal(InputError):
    pass


class NotPrincipal(InputError):
    pass


# functors and fractions

class NotAFunctor(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnExactor(InputError):
    pass


class NotExactor(InputError):
    pass


class NotSEquivalence(InputError):
    pass


class NotCotransversal(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotComposable(InputError):
    pass


class ReductionDiverged(AssertionError):
    """Fraction reduction failed to shrink; always indicates a bug."""
