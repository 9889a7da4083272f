"""Exception types shared across the package."""


class FlameSentinelError(Exception):
    """Base class for all errors raised by this package."""


class InputDomainError(FlameSentinelError, ValueError):
    """An argument violates a documented precondition (bad shapes, ranges, names)."""


class FormatError(FlameSentinelError, ValueError):
    """A file or byte stream does not conform to its declared format."""


class ConfigError(FlameSentinelError, ValueError):
    """A configuration document is inconsistent or contains unknown keys."""
