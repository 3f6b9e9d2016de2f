"""Exception types raised across the package."""


class NakayamaError(Exception):
    """Base class for every error raised by this package."""


class MalformedPath(NakayamaError, ValueError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class RankMismatch(NakayamaError, ValueError):
    pass


class UnknownLabel(NakayamaError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


class TopPathOnly(NakayamaError, ValueError):
    pass


class ZeroDenominator(NakayamaError, ZeroDivisionError):
    pass


class PoleAtPoint(NakayamaError, ZeroDivisionError):
    pass


class NotComparable(NakayamaError, ValueError):
    pass


class ChainMismatch(NakayamaError, ValueError):
    pass


class DegenerateVertex(NakayamaError):
    pass


class VerificationFailure(NakayamaError):
    """A mathematical check failed; ``label`` and ``witness`` identify where."""

    def __init__(self, message: str, label=None, witness=None):
        super().__init__(message)
        self.label = label
        self.witness = witness
