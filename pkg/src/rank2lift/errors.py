"""Exception hierarchy for rank2lift.

Every error raised by library code derives from :class:`Rank2LiftError`, which
is itself a ``ValueError`` so callers that only care about "bad input" can
catch the builtin.
"""

from __future__ import annotations


class Rank2LiftError(ValueError):
    """Base class for all rank2lift errors."""


class DimensionMismatchError(Rank2LiftError):
    """Vectors or subspaces live in incompatible ambient dimensions."""


class FieldMismatchError(Rank2LiftError):
    """Real and complex data were mixed, or the wrong field was supplied."""


class EmptySpanError(Rank2LiftError):
    """All inputs were numerically zero."""


class ZeroVectorError(Rank2LiftError):
    """A vector that must be nonzero was (numerically) zero."""


class NotSymmetricError(Rank2LiftError):
    """Operator is not symmetric/Hermitian within tolerance."""


class NotOrthonormalError(Rank2LiftError):
    """A supplied basis fails the orthonormality test."""


class GuardExceededError(Rank2LiftError):
    """An exhaustive procedure would exceed its size guard."""


class NotPrimeError(Rank2LiftError):
    """A prime parameter was composite or out of range."""


class UnverifiedInputError(Rank2LiftError):
    """Input claimed a property (MUB, tight, unit norm) that does not hold."""


class FamilyFileError(Rank2LiftError):
    """A family file is malformed or incompatible with the requested command."""


class CertificationError(Rank2LiftError):
    """A construction failed its own post-verification."""


class InvalidWeightError(Rank2LiftError):
    """A fusion weight was not strictly positive."""


class OutputFileError(Rank2LiftError):
    """A family or report file could not be written."""
