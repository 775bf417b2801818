"""Exception hierarchy. Everything derives from ``SpectrumError`` (a ``ValueError``)."""


class SpectrumError(ValueError):
    pass


class NonPositiveExponent(SpectrumError):
    pass


class OpenSetViolation(SpectrumError):
    pass


class InvalidWord(SpectrumError):
    pass


class WordTooLong(SpectrumError):
    pass


class PrefixTooShort(SpectrumError):
    pass


class OddPrefix(SpectrumError):
    pass


class OutOfRange(SpectrumError):
    pass


class DegenerateParams(SpectrumError):
    """p or q sits on {0, 1}, where a required logarithm is infinite."""


class DegenerateDenominator(SpectrumError):
    pass


class OutOfCurveDomain(SpectrumError):
    pass


class BoundaryParams(SpectrumError):
    pass


class NotOnCurve(SpectrumError):
    pass


class EqualExponents(SpectrumError):
    pass


class NonZeroQ(SpectrumError):
    pass


class NoConvergence(SpectrumError):
    pass
