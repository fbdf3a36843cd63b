"""Exception hierarchy shared by all modules."""


class F1ZetaError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(F1ZetaError, ValueError):
    pass


class InvalidModulusError(InvalidArgumentError):
    pass


class DomainError(F1ZetaError, ValueError):
    """An argument lies outside the region where the operation is defined."""


class PoleError(DomainError):
    """Evaluation requested on (or within the exclusion radius of) a pole."""


class BranchError(DomainError):
    """Parameters admit neither branch of the Hurwitz presentation."""


class ConvergenceError(F1ZetaError, ArithmeticError):
    pass


class ResourceError(F1ZetaError):
    """A brute-force computation would exceed its configured size cap."""


class ParseError(F1ZetaError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(F1ZetaError, ValueError):
    pass
