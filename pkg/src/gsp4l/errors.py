"""Exception hierarchy.

Everything the library raises on bad input or bad data derives from
``Gsp4Error`` so the CLI can map library failures to exit code 2 while
genuine bugs still escape as ordinary tracebacks.
"""


class Gsp4Error(Exception):
    """Base class for all domain errors raised by this package."""


class MixedBackend(Gsp4Error):
    """Exact and float scalars were mixed in a single operation."""


class IncompatibleRadicals(Gsp4Error):
    """Sum of exact scalars with different square-root parts."""


class ExactnessRequired(Gsp4Error):
    """An operation that is exact-only received float data."""


class ZeroConstantTerm(Gsp4Error):
    """Series inversion with a non-invertible constant term."""


class TruncationMismatch(Gsp4Error):
    """Two truncated objects of different order/bound were combined."""


class MissingPrime(Gsp4Error):
    """A required prime has no supplied local data."""


class ConstraintViolated(Gsp4Error):
    """Satake constraint alpha0^2*alpha1*alpha2 = p^(2k-3) fails."""


class NumericallyDegenerate(Gsp4Error):
    """Float data too close to a branch point to canonicalize safely."""


class KindMismatch(Gsp4Error):
    """Spin and standard parameter multisets were mixed."""


class UnknownPrime(Gsp4Error):
    """Eigenvalue data was requested at a prime not stored."""


class BadPrime(Gsp4Error):
    """A prime dividing the level was used where coprimality is required."""


class WeightMismatch(Gsp4Error):
    """Elliptic weight does not match the lift weight 2k-2."""


class OddWeight(Gsp4Error):
    """Even weight required."""


class WeightTooSmall(Gsp4Error):
    """Weight below the smallest value the construction supports."""


class NotFundamental(Gsp4Error):
    """Integer is not a fundamental discriminant."""


class PoleHit(Gsp4Error):
    """A gamma factor was evaluated at a pole."""

    def __init__(self, atom, argument):
        self.atom = atom
        self.argument = argument
        super().__init__(f"pole of {atom} at gamma argument {argument}")


class InsufficientTruncation(Gsp4Error):
    """A weighted sum needs coefficients beyond the stored truncation."""


class LevelMismatch(Gsp4Error):
    """Form level does not divide the requested level."""


class ParseError(Gsp4Error):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class SchemaError(Gsp4Error):
    """Record violates the documented JSON schema; carries the field path."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class InvariantError(Gsp4Error):
    """Record parsed but violates a documented invariant."""
