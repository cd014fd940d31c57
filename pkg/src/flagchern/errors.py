"""Exception hierarchy shared by all modules."""


class FlagChernError(Exception):
    """Base class for every error raised by flagchern."""


class EmptyOrShortVector(FlagChernError, ValueError):
    pass


class NonPositivePart(FlagChernError, ValueError):
    pass


class TooManyDecompositions(FlagChernError, RuntimeError):
    pass


class DuplicateAssignmentValue(FlagChernError, ValueError):
    pass


class ParseError(FlagChernError, ValueError):
    """Malformed expression text; ``position`` is a 0-based column."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ZeroGeneratorIndex(ParseError):
    pass


class PartitionWeightMismatch(FlagChernError, ValueError):
    pass


class DegreeNotBelowD(FlagChernError, ValueError):
    pass


class DegreeMismatch(FlagChernError, ValueError):
    pass


class NonConstantResidue(FlagChernError, AssertionError):
    pass


class NonIntegerChernNumber(FlagChernError, AssertionError):
    pass


class ShapeMismatch(FlagChernError, ValueError):
    pass


class NotInChart(FlagChernError, ValueError):
    pass


class IllConditioned(FlagChernError, ArithmeticError):
    pass


class ZeroScalar(FlagChernError, ValueError):
    pass


class WeightExtractionFailed(FlagChernError, ArithmeticError):
    pass
