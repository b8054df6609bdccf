"""Exception types shared by every kernel module.

All domain errors derive from :class:`OreSeriesError`, so front ends can map
any kernel failure to a single exit path while still reporting the precise
error name.
"""


class OreSeriesError(Exception):
    """Base class for all kernel errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ContextMismatch(OreSeriesError):
    """Operands belong to different field contexts."""


# field construction / endomorphism
class ParseError(OreSeriesError):
    """Malformed field spec, element, polynomial or series literal."""


class InvalidModulus(OreSeriesError):
    """The requested field modulus is not prime / not irreducible."""


class InvalidSubstitution(OreSeriesError):
    """The substitution image does not define a field endomorphism."""


class NegativePowerOfNonInvertibleEndo(OreSeriesError):
    """A negative power of a non-invertible endomorphism was requested."""


# polynomials and fractions
class DivisionByZeroPoly(OreSeriesError):
    """Division by the zero polynomial."""


class RequiresAutomorphism(OreSeriesError):
    """The operation needs the inverse endomorphism, which is unavailable."""


class BothZero(OreSeriesError):
    """gcd of two zero polynomials is undefined."""


class ZeroInverse(OreSeriesError):
    """Inverse of the zero fraction."""


# series
class NonInvertibleSeries(OreSeriesError):
    """Series with zero constant term has no multiplicative inverse."""


class PrecisionExhausted(OreSeriesError):
    """Not enough known coefficients to carry out the operation."""


class NotASeries(OreSeriesError):
    """The fraction does not lie in the ring of twisted power series."""


class InsufficientSeed(OreSeriesError):
    """Too few seed coefficients to run the recurrence."""


# guessing / representations
class NoRecurrenceFound(OreSeriesError):
    """No certified recurrence up to the requested order at this precision."""


class GuessFailed(OreSeriesError):
    """Reconstruction pipeline failed; retry with a larger precision guard."""


class NotSimilar(OreSeriesError):
    """No similarity transform links the two representations."""


class CertificationFailed(OreSeriesError):
    """Internal bug guard: an exact certificate did not verify."""


class CharacterizationMismatch(OreSeriesError):
    """Internal bug guard: equivalent regularity tests disagreed."""
