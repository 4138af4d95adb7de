"""Exception types shared across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ZeroPolynomial(EngineError):
    """The zero function vanishes everywhere; it has no circle divisor."""


class NonConvergence(EngineError):
    """Root finding failed or produced an inconsistent zero structure.

    Carries a ``diagnostics`` dict (iteration counts, residuals, suspect
    roots) so callers can report what went wrong instead of guessing.
    """

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class AllZeroGenerators(EngineError):
    """A generating set must contain at least one nonzero function."""


class OddDegree(EngineError):
    """The divisor has odd degree, so the ideal is not principal."""


class EvenDegree(EngineError):
    """The decomposition applies only to odd-degree (nonprincipal) divisors."""


class TooLarge(EngineError):
    """The divisor exceeds the exhaustive-enumeration guard."""


class ParseError(EngineError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedConstruct(EngineError):
    """Syntactically valid input outside the supported expression language."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
