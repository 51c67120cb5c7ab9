"""
Exception hierarchy for taxicab-forge.

Every error raised by the engine derives from TaxicabForgeError so callers
(the CLI in particular) can map families of errors to exit codes.
"""


class TaxicabForgeError(Exception):
    """Base class for all taxicab-forge errors"""


class PreconditionError(TaxicabForgeError, ValueError):
    """An operation was called outside its domain"""


class UndefinedRationalError(PreconditionError, ZeroDivisionError):
    """A rational with zero denominator was requested"""


class UnsupportedTowerError(PreconditionError):
    """A radical computation needs more square roots than the tower holds"""


class NotTaylorExpandableError(PreconditionError):
    """The denominator vanishes at x = 0"""


class UnsupportedShapeError(PreconditionError):
    """The rational function is not strictly proper, or the shape is wrong"""


class DegenerateDirectionError(PreconditionError):
    """The chord direction makes the line tangent or undefined"""


class DegenerateSeedError(PreconditionError):
    """A seed makes a radicand denominator vanish"""


class InvalidSeedError(PreconditionError):
    """A seed does not satisfy its cube relation"""


class NotClearableError(PreconditionError):
    """No power of the base up to the cap clears the denominators"""


class UnknownNameError(PreconditionError, KeyError):
    """A built-in family or identity name was not found"""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class ParseError(TaxicabForgeError, ValueError):
    """A textual literal could not be parsed"""


class InsufficientBoundError(TaxicabForgeError):
    """The search bound is too small to certify a result"""


class InconsistencyError(TaxicabForgeError):
    """A constructed value failed its own verification"""
