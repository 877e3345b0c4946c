"""Exception hierarchy.

Every failure the library can signal deliberately derives from ZetaCodesError,
so callers (and the CLI) can distinguish domain failures from bugs.
"""


class ZetaCodesError(Exception):
    pass


# group construction / word plumbing

class EmptyModuli(ZetaCodesError):
    pass


class ModulusBelowTwo(ZetaCodesError):
    pass


class ShapeMismatch(ZetaCodesError):
    pass


class EnumerationBoundExceeded(ZetaCodesError):
    pass


# codes

class ZeroCode(ZetaCodesError):
    pass


class IndexOutOfRange(ZetaCodesError):
    pass


class LengthTooShort(ZetaCodesError):
    pass


class NotMDS(ZetaCodesError):
    pass


# exact algebra

class RangeError(ZetaCodesError):
    pass


class NonzeroRemainder(ZetaCodesError):
    pass


class MassMismatch(ZetaCodesError):
    pass


class NonIntegralResult(ZetaCodesError):
    pass


# zeta / Duursma calculus

class MinimumDistanceTooSmall(ZetaCodesError):
    pass


class InconsistentDistribution(ZetaCodesError):
    """The weight data cannot come from a code with the claimed parameters."""


class NonIntegerGenus(ZetaCodesError):
    pass


class ContextMismatch(ZetaCodesError):
    pass


class DegreeTooHigh(ZetaCodesError):
    pass


class OrderTooShort(ZetaCodesError):
    pass


# curves

class NotPrime(ZetaCodesError):
    pass


class UnsupportedExtension(ZetaCodesError):
    pass


class HasseBoundViolation(ZetaCodesError):
    """Point counts incompatible with a smooth curve of the asserted genus."""


# CLI

class ParseError(ZetaCodesError):
    pass
