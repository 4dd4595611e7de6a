"""Custom exceptions module"""


class AlpertException(Exception):
    """Common base class for all alpert_bases exceptions."""
    def __init__(self, reason: str):
        super().__init__()
        self.reason = reason

    def __str__(self) -> str:
        return '%s' % self.reason


class InvalidArgumentException(AlpertException):
    """Raised when arguments are not correct."""
    pass


class DimensionMismatchException(InvalidArgumentException):
    """Raised when objects over a different number of variables are combined."""
    pass


class ZeroPolynomialException(AlpertException):
    """Raised when the leading term of the zero polynomial is requested."""
    pass


class NonGradedOrderException(AlpertException):
    """Raised when an operation needs a graded monomial order."""
    pass


class CubeOutsideWindowException(AlpertException):
    """Raised if a cube or a function piece lies outside the allowed region."""
    pass


class InvalidAssignmentException(AlpertException):
    """Raised if a family assignment breaks the containment or nesting hypotheses."""
    pass


class HypothesisViolatedException(AlpertException):
    """Raised when a telescoping identity is requested outside its hypothesis."""
    pass


class StepLimitExceededException(AlpertException):
    """Raised if Buchberger's algorithm exceeds its S-pair budget."""
    pass


class InputFileException(AlpertException):
    """Raised if an input file cannot be read or decoded."""
    pass


class VerificationFailedException(AlpertException):
    """Raised if a verification residual or a dimension identity fails."""
    pass
