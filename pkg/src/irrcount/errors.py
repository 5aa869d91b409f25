"""Exception types shared across the package."""


class IrrcountError(Exception):
    """Base class for all package errors."""


class DomainError(IrrcountError):
    """An argument is outside the supported domain (e.g. l >= p, n = 0 mod p)."""


class BudgetExceeded(IrrcountError):
    """An enumeration would visit more elements than the configured budget."""


class ValidityError(IrrcountError):
    """A formula was evaluated outside its validity set."""


class NonIntegralSolution(IrrcountError):
    """A transform produced a non-integer where an exact count was expected."""


class NonIntegralCount(IrrcountError):
    """A curve-count average failed its integrality assertion."""


class NonIntegralResult(IrrcountError):
    """A Moebius-layer combination failed its integrality assertion."""


class ValidationFailed(IrrcountError):
    """Recovered zeta data failed its predicted-count validation."""


class ParseError(IrrcountError):
    """A serialized formula could not be parsed."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)
