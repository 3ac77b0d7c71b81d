"""Exception types shared across the package."""


class BsSclError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BsSclError):
    """Input text is not a valid word over {a, t}."""

    def __init__(self, position: int, reason: str):
        super().__init__(f"parse error at position {position}: {reason}")
        self.position = position
        self.reason = reason


class NonTerminating(BsSclError):
    """An iterative normalization exceeded its configured bound."""

    def __init__(self, bound: int):
        super().__init__(f"normalization did not settle within {bound} iterations")
        self.bound = bound


class NotHyperbolicZeroExponent(BsSclError):
    """Turn graphs exist only for hyperbolic words with zero t-exponent."""


class LimitExceeded(BsSclError):
    """An enumeration produced more objects than the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"enumeration exceeded cap: {count} > {cap}")
        self.count = count
        self.cap = cap


class DimensionMismatch(BsSclError):
    """A vector's length does not match the linear program's variable count."""


class NotApplicable(BsSclError):
    """The requested quantity is undefined for this input."""


class NotAlternating(BsSclError):
    """The operation requires an alternating cyclic word."""


class PreconditionViolated(BsSclError):
    """An argument fails the operation's stated precondition."""


class NonIntegralScaling(BsSclError):
    """N times the solution vector is not integral."""


class EllipticInput(BsSclError):
    """The operation requires a hyperbolic element."""


class NonZeroTExponent(BsSclError):
    """The operation requires total t-exponent zero."""


class NonStabilized(BsSclError):
    """A limit computation failed its internal stabilization check."""


class InternalInconsistency(BsSclError):
    """Two independent computations that must agree did not agree."""
