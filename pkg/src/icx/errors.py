"""Exception types shared across the package."""


class IcxError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(IcxError):
    """Operands belong to different finite fields."""


class DivisionByZero(IcxError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatch(IcxError):
    """Matrix or subspace dimensions are incompatible."""


class FieldTooSmall(IcxError):
    """The field does not have enough elements for the construction."""


class OddDimension(IcxError):
    """Spread construction requires an even ambient dimension."""


class BadParams(IcxError):
    """Family generator parameters violate the constructor preconditions."""


class CannotNormalize(IcxError):
    """Instance cannot be normalized to the requested demand size."""


class ParseError(IcxError):
    """Malformed instance or scheme file."""


class SchemeMalformed(IcxError):
    """Scheme matrices are inconsistent with the field/instance."""


class NoDecoderExists(IcxError):
    """Zero-forcing decoder synthesis failed (scheme is not resolvable)."""


class NotNormalized(IcxError):
    """Operation requires every destination to desire the same number of messages."""


class Infeasible(IcxError):
    """Requested symmetric rate is not achievable; carries the conflict witness."""

    def __init__(self, witness):
        super().__init__(f"rate infeasible, conflict witness {witness}")
        self.witness = witness


class UnsupportedL(IcxError):
    """Operation is only defined for single-demand (L=1) instances."""


class UnsupportedFamily(IcxError):
    """Instance has no (or the wrong) family tag for this operation."""


class BudgetExceeded(IcxError):
    """Search or enumeration space exceeds the configured budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class TranslationFailed(IcxError):
    """Scheme translation produced an empty precoder for some message."""
