"""Exception types shared across the package."""


class PerpointsError(Exception):
    """Base class for every package-specific error."""


class NotPrimeError(PerpointsError):
    """The requested field characteristic is not a prime number."""


class FieldTooLargeError(PerpointsError):
    """A field (or subfield enumeration) exceeds the configured size cap."""


class DivisionByZeroError(PerpointsError, ZeroDivisionError):
    """Inversion of the zero element of a finite field."""


class NotADivisorError(PerpointsError):
    """A subfield degree that does not divide the working extension degree."""


class NotAMorphismError(PerpointsError):
    """Homogeneous coordinate forms share a projective root (zero resultant),
    or a Mobius matrix is singular."""


class MapDoesNotCommuteError(PerpointsError):
    """The self-map fails to commute with a declared automorphism."""


class GroupTooLargeError(PerpointsError):
    """Generator closure exceeded the group size cap; the generators span an
    infinite or oversized subgroup of PGL2."""


class NotClosedError(PerpointsError):
    """A point set handed to the periodic-set extractor is not closed under
    the map."""


class NotAbelianError(PerpointsError):
    """A twist operation was requested for a non-abelian automorphism group."""


class MismatchError(PerpointsError):
    """Two independently computed counts disagree."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class ConstantTermZeroError(PerpointsError):
    """Series inversion or logarithm of a series with zero constant term."""


class ConstantTermNotZeroError(PerpointsError):
    """Series exponential of a series with nonzero constant term."""


class ConstantTermNotOneError(PerpointsError):
    """Series logarithm with constant term other than one; the result would
    not have rational coefficients."""


class ParseError(PerpointsError):
    """Malformed configuration text; message carries location detail."""
