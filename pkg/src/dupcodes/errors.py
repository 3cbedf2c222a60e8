"""Exception types shared across the package."""


class DuplicationError(ValueError):
    """Base class for bad input to any operation."""


class InvalidLetter(DuplicationError):
    pass


class NoComplement(DuplicationError):
    pass


class OddQ(NoComplement):
    pass


class OutOfRange(DuplicationError):
    pass


class EmptyWord(DuplicationError):
    pass


class NotMultipleOfK(DuplicationError):
    pass


class WrongPatternLength(DuplicationError):
    pass


class BadRunAlphabet(DuplicationError):
    pass


class SignatureMismatch(DuplicationError):
    """Two words have different signatures, so their k=1 rc cones are disjoint."""


class PreconditionFailed(DuplicationError):
    pass


class TooShort(DuplicationError):
    pass


class BadDistance(DuplicationError):
    pass


class NotProperlySpaced(DuplicationError):
    pass


class DecodeFailure(DuplicationError):
    pass


class BudgetMissing(DuplicationError):
    pass


class ReplayError(DuplicationError):
    def __init__(self, step: int, cause: Exception):
        super().__init__(f"step {step}: {cause}")
        self.step = step
        self.cause = cause


class WitnessTooLarge(RuntimeError):
    """A construction exceeded its event cap."""


class InternalProofViolation(AssertionError):
    """A property guaranteed by the underlying construction did not hold.

    Raised for implementation bugs, never for bad input.
    """
