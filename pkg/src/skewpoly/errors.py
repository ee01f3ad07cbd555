"""Exception types shared across the package."""


class SkewError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(SkewError):
    """Malformed input text."""


class PrecisionError(SkewError):
    """An operation needs more precision than the operands carry."""


class ValuationUndeterminedError(PrecisionError):
    """A series is zero up to its precision, so its valuation is unknown."""


class CapExceededError(SkewError):
    """A brute-force enumeration would exceed the configured cap."""
