"""Exception hierarchy for the olk package."""


class OlkError(Exception):
    """Base class for all package-specific errors."""


class DomainError(OlkError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ValidationError(OlkError, ValueError):
    """A space or element descriptor (JSON or constructor arguments) is malformed.

    ``field`` names the offending entry when known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class NotInSpaceError(OlkError):
    """No scaling of the element has finite modular."""


class ConvergenceError(OlkError):
    """An iterative solve exhausted its bracket or iteration budget."""


class UndecidedError(ConvergenceError):
    """A convergence classifier could not make a sound call."""


class InfeasibleParameterError(OlkError, ValueError):
    """Witness parameters violate their feasibility condition."""
