# padic/exceptions.py
from django.core.exceptions import ValidationError


class PadicError(Exception):
    """Base class for every arithmetic error raised by the engine"""

    def __str__(self):
        message = getattr(self, 'message', None)
        if message is not None:
            return str(message)
        return super().__str__()


class CompositeModulus(PadicError, ValidationError):
    """The requested base of the p-adic context is not prime"""


class BadPrecision(PadicError, ValidationError):
    """Precision exponent below 1"""


class OutOfRange(PadicError, ValidationError):
    """An index argument lies outside the range where the value is defined"""


class DivisionByZero(PadicError):
    pass


class PrecisionExhausted(PadicError):
    """Attained precision does not reach the requested modulus"""


class NegativeValuation(PadicError):
    """A residue was requested for a value that is not a p-adic integer"""


class NotPAdicInteger(PadicError):
    pass


class NotAUnit(PadicError):
    pass


class ExactPole(PadicError):
    """A rational denominator vanished exactly"""


class NoRepresentation(PadicError):
    """The prime is not represented by the requested quadratic form"""
