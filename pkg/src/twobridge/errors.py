"""Exception types shared across the toolkit."""


class TwoBridgeError(Exception):
    """Base class for all toolkit errors."""


class NonCoprimeError(TwoBridgeError):
    """The two parameters are not coprime."""


class EvenPError(TwoBridgeError):
    """p is even: that is a 2-bridge link, not a knot."""


class OutOfRangeError(TwoBridgeError):
    """A parameter is outside its admissible range."""


class BothZeroError(TwoBridgeError):
    """gcd of two zero polynomials is undefined."""


class ZeroDivisorError(TwoBridgeError):
    """Division by the zero polynomial."""


class DegreeMismatchError(TwoBridgeError):
    """Internal consistency failure: a computed polynomial has the wrong shape.

    This signals a bug in the toolkit, not a mathematical condition.
    """


class DidNotConvergeError(TwoBridgeError):
    """Numeric root refinement failed to reach the requested tolerance."""


class NotARootError(TwoBridgeError):
    """The supplied value is not a root of the relevant polynomial."""
