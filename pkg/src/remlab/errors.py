"""Exception types shared across the library.

Every error that callers are expected to catch lives here, so that the
CLI can map them onto stable exit codes without importing half the
library.
"""


class RemlabError(Exception):
    """Base class for all library-specific errors."""


class InvalidSpec(RemlabError):
    """A real-number or sequence descriptor is malformed or unsupported."""


class PrecisionExhausted(RemlabError):
    """The adaptive-precision ladder hit its bit cap before certifying."""

    def __init__(self, message: str, bits_tried: int = 0):
        super().__init__(message)
        self.bits_tried = bits_tried


class NotFound(RemlabError):
    """A bounded search ended without a witness (caller broke a guarantee)."""


class InexactCF(RemlabError):
    """An operation needed an exact (closed periodic) continued fraction."""


class InvalidPhi(RemlabError):
    """Growth function violates phi(n) >= 2n or monotonicity."""


class UnboundedQuotients(RemlabError):
    """Input lacks the bounded-partial-quotient structure the builder needs."""


class DepthTooLarge(RemlabError):
    """Requested construction depth exceeds the configured work budget."""


class DegenerateInput(RemlabError):
    """Input is degenerate for the requested operation (e.g. rational alpha)."""


class UnresolvedMembership(RemlabError):
    """Interval membership could not be certified at the declared tolerance."""
