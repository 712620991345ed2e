"""Exception hierarchy.

Every input-validation failure derives from :class:`EqbsError`, itself a
``ValueError``, so callers can catch one class.  :class:`BWBMismatch` is the
exception: it signals an internal inconsistency, not bad input.
"""


class EqbsError(ValueError):
    pass


class NotWeaklyDecreasing(EqbsError):
    pass


class MismatchedLength(EqbsError):
    pass


class NegativePart(EqbsError):
    pass


class EmptyRange(EqbsError):
    pass


class NotComparable(EqbsError):
    pass


class TooLarge(EqbsError):
    pass


class BadIndex(EqbsError):
    pass


class NonIntegerEntry(EqbsError):
    pass


class RankDefectError(EqbsError):
    pass


class NoViolation(EqbsError):
    pass


class BadShape(EqbsError):
    pass


class DuplicateDegree(EqbsError):
    pass


class BadRow(EqbsError):
    pass


class NegativeBox(EqbsError):
    pass


class BadIndices(EqbsError):
    pass


class InvalidBorderChoice(EqbsError):
    def __init__(self, row: int, message: str = ""):
        self.row = row
        super().__init__(message or f"invalid border choice in row {row}")


class BWBMismatch(RuntimeError):
    """Borel-Weil-Bott output disagrees with the border-strip bookkeeping."""
