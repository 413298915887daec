"""Exception hierarchy shared by every module of the package."""


class CactiError(Exception):
    """Base class for all package errors."""


class DivisionByZero(CactiError, ZeroDivisionError):
    pass


class MixedFields(CactiError, TypeError):
    pass


class ParseError(CactiError, ValueError):
    pass


class MalformedPresentation(CactiError, ValueError):
    pass


class UnsupportedParams(CactiError, ValueError):
    pass


class NotGroupLike(CactiError, ValueError):
    pass


class ParentMismatch(CactiError, ValueError):
    pass


class NonHomogeneous(CactiError, ValueError):
    pass


class UnsupportedGrading(CactiError, NotImplementedError):
    """Raised for operations that are only implemented for internal degree 0."""


class ExtractionFailure(CactiError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IncompatibleChain(CactiError):
    pass


class NotABialgebraMorphism(CactiError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class TruncationExceeded(CactiError):
    pass


class NotACocycle(CactiError):
    pass
