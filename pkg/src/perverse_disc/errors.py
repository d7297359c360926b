"""
Exception hierarchy for perverse-disc.

Validators and certificates report mathematical failures as values; the
exceptions below are raised for shape errors in the algebra, for functors
applied to invalid data, and for unreadable documents.
"""

from typing import TYPE_CHECKING, Optional, Sequence, Tuple

if TYPE_CHECKING:
    from .domain.models import Violation


class PerverseDiscError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatchError(PerverseDiscError, ValueError):
    """Operands have incompatible shapes."""


class NotInvertibleError(PerverseDiscError, ArithmeticError):
    """Inverse requested for a non-square or singular map."""


class NotADirectSumError(PerverseDiscError, ValueError):
    """Two subspaces are not complementary in their ambient space."""


class ImageNotContainedError(PerverseDiscError, ValueError):
    """A map's image escapes the subspace it was expressed in."""


class ObjectMismatchError(PerverseDiscError, ValueError):
    """Composition of morphisms whose middle objects differ."""


class InvalidObjectError(PerverseDiscError, ValueError):
    """A functor or construction received data failing its validator."""

    def __init__(self, message: str, violations: Sequence["Violation"] = ()):
        super().__init__(message)
        self.violations: Tuple["Violation", ...] = tuple(violations)

    def __str__(self) -> str:
        base = super().__str__()
        if not self.violations:
            return base
        return base + ": " + "; ".join(str(v) for v in self.violations)


class RetryLimitExceededError(PerverseDiscError, RuntimeError):
    """The generator hit its rejection limit; reseed and try again."""


class DocumentError(PerverseDiscError, ValueError):
    """A document could not be read."""


class DocumentSyntaxError(DocumentError):
    """Malformed JSON text."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class DocumentShapeError(DocumentError):
    """Well-formed JSON whose content does not describe a valid document."""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class ConfigurationError(PerverseDiscError, LookupError):
    """A suite profile is missing or malformed."""
