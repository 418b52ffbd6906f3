"""Exception types shared across the package."""


class PVError(Exception):
    """Base class for all errors raised by chebpv."""


class ArgumentError(PVError, ValueError):
    pass


class DomainError(PVError, ValueError):
    """Raised when an abscissa lies outside [-1, 1]."""


class ValidationError(PVError, ValueError):
    """An integrand description that cannot be integrated."""


class InvalidInterval(ValidationError):
    pass


class EndpointSingularity(ValidationError):
    pass


class HypersingularUnsupported(ValidationError):
    """Order p > 1: would need a Hadamard finite part, which is not provided."""


class NumericalError(PVError, ArithmeticError):
    pass


class NonFiniteSample(NumericalError):
    def __init__(self, x, value):
        super().__init__(f"integrand is not finite at x={x!r} (got {value!r})")
        self.x = x
        self.value = value


class ToleranceNotMet(NumericalError):
    pass
