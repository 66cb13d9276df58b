"""Exception types raised across the package."""


class RRCauchyError(ValueError):
    """Base class for every error raised by rrcauchy."""


class ZeroConstantTerm(RRCauchyError):
    pass


class NegativeShift(RRCauchyError):
    pass


class BadResidue(RRCauchyError):
    pass


class UnsortedBiword(RRCauchyError):
    pass


class ShapeMismatch(RRCauchyError):
    pass


class InvalidTableau(RRCauchyError):
    pass


class DomainViolation(RRCauchyError):
    pass


class UnsupportedClosedForm(RRCauchyError):
    pass


class InvalidParams(RRCauchyError):
    pass
