"""Exception types shared across the package."""


class RhiError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RhiError):
    """Malformed expression or input document."""


class ConfigError(RhiError):
    """Invalid configuration value (field spec, truncation degree, CLI range)."""


class ValidationError(RhiError):
    """A structural axiom or morphism law fails; the message names the offender."""


class TruncationError(RhiError):
    """A computation needs degrees beyond the realized window."""

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class CapExceededError(RhiError):
    """A brute-force search hit its depth cap before reaching a verdict."""
