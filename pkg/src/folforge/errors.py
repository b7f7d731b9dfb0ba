"""Exception hierarchy shared by every module."""


class FolforgeError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""

    exit_code = 3


class InputError(FolforgeError, ValueError):
    exit_code = 3


class AssertionFailure(FolforgeError):
    """A verification identity did not hold."""

    exit_code = 2


class ZeroPolynomial(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class DegreeUnderflow(InputError):
    pass


class ZeroForm(InputError):
    pass


class NotRadiallyAnnihilated(InputError):
    pass


class NotHomogeneous(InputError):
    pass


class DegenerateEmbedding(FolforgeError):
    pass


class GcdNotOne(InputError):
    pass


class ResidueConstraintViolated(InputError):
    pass


class InhomogeneousInput(InputError):
    pass


class RankDeficientProjection(InputError):
    pass


class ZeroDenominator(InputError):
    pass


class NotLowDegree(InputError):
    pass


class ClassificationIncomplete(AssertionFailure):
    pass


class DegreeMismatch(InputError):
    pass


class DegenerateBasepoint(FolforgeError):
    pass


class UnsupportedAmbient(InputError):
    pass


class KernelDimensionUnexpected(AssertionFailure):
    def __init__(self, dimension, message=""):
        super().__init__(message or f"kernel dimension {dimension}")
        self.dimension = dimension


class SolverDimensionUnexpected(AssertionFailure):
    pass


class SizeMismatch(InputError):
    pass


class NotNilpotent(InputError):
    pass


class NoSolution(FolforgeError):
    pass


class InvariantViolation(InputError):
    pass


class PlaneDisagreement(AssertionFailure):
    pass


class EntryOutOfRange(InputError):
    pass


class RelationViolated(InputError):
    pass


class DegenerateLine(FolforgeError):
    pass


class ParseError(InputError):
    """Expression error with a 1-based source position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line, self.col = line, col


class ExpressionSyntaxError(ParseError):
    pass


class UnknownIdentifier(ParseError):
    pass


class GradingError(ParseError):
    pass
