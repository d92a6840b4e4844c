"""Exception types shared across the package."""

from __future__ import annotations


class HeckeError(Exception):
    """Base class for recoverable, reportable failures."""


class ValidationFailed(HeckeError):
    """Input data violates one or more structural requirements."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ContextMismatch(HeckeError):
    pass


class BoundExceeded(HeckeError):
    pass


class NotATranslationRequired(HeckeError):
    """Raised when an operation needs a non-translation element but got a translation."""


class NotFound(HeckeError):
    def __init__(self, cap: int, message: str = ""):
        self.cap = cap
        super().__init__(message or f"search exhausted cap {cap}")


class WindowExceeded(HeckeError):
    pass


class NotCentral(HeckeError):
    def __init__(self, generator: str, commutator):
        self.generator = generator
        self.commutator = commutator
        super().__init__(f"does not commute with {generator}: commutator {commutator}")


class ResidueNonzero(HeckeError):
    def __init__(self, residue):
        self.residue = residue
        super().__init__(f"orbit-sum peeling left a nonzero residue: {residue}")


class ConfigError(HeckeError):
    pass


class ParseError(ConfigError):
    pass


class SchemaVersionMismatch(ConfigError):
    pass


class LiteralError(ConfigError):
    """A malformed element literal on the command line."""
