class TransDistError(ValueError):
    """
    Base class for every error raised by transdist.

    Subclasses ValueError so callers that already guard input validation with
    `except ValueError` keep working.
    """


class PermutationError(TransDistError):
    pass


class NotABijection(PermutationError):
    pass


class LengthMismatch(PermutationError):
    pass


class MalformedCycle(PermutationError):
    pass


class ElementOutOfRange(PermutationError):
    pass


class SizeMismatch(PermutationError):
    pass


class TreeError(TransDistError):
    pass


class NotConnected(TreeError):
    pass


class HasCycle(TreeError):
    pass


class NonPositiveWeight(TreeError):
    pass


class DegreeTooHigh(TreeError):
    pass


class VertexOutOfRange(TreeError):
    pass


class NotAYTree(TreeError):
    pass


class CenterHasNoBranch(TreeError):
    pass


class TreeFileError(TreeError):
    """
    Raised while reading a tree file.

    Attributes:
        line: 1-based line number of the offending line, or None when the problem is global.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class SolverError(TransDistError):
    pass


class NotOnPath(SolverError):
    pass


class CenterNotInCycle(SolverError):
    pass


class NotBalanced(SolverError):
    pass


class NotUnbalanced(SolverError):
    pass


class NonSortingInput(SolverError):
    pass


class NoProgress(SolverError):
    pass


class OracleError(TransDistError):
    pass


class BudgetExceeded(OracleError):
    pass


class TransformFileError(PermutationError):
    """
    Raised while reading a transform file.

    Attributes:
        line: 1-based line number of the offending line, or None when the problem is global.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ConfigError(TransDistError):
    """
    Raised when command-line arguments are missing or inconsistent for the selected mode.
    """
