"""Exception types shared across the package."""


class RmjacError(Exception):
    """Base class for all package errors."""


class NotSquarefree(RmjacError):
    """Polynomial has a repeated factor where a squarefree one is required."""


class NonSeparable(RmjacError):
    """Sextic has discriminant zero and the allow-singular flag is off."""


class BadReduction(RmjacError):
    """Reduction mod p hits a denominator divisible by p."""


class IdentityViolation(RmjacError):
    """A structural identity that must hold by construction failed."""


class BadEpsilon(RmjacError):
    """Constant fails the defining equations z^4+1 = 0 and z^3+z-1 = 0."""


class DivisionByZero(RmjacError):
    """Division by zero in an exact domain."""


class WrongCharacteristic(RmjacError):
    """Operation applied over a domain of the wrong characteristic."""


class ExhaustedSpecializations(RmjacError):
    """Too few good specialization points exist for the requested sample count."""


class UnexpectedAlgebra(RmjacError):
    """Subalgebra census produced a class outside the expected four."""


class FixtureMismatch(RmjacError):
    """Stored fixture row disagrees with the value rederived from parameters."""


class Unsupported(RmjacError):
    """Input outside the supported regime (e.g. characteristic 2 field arithmetic)."""
