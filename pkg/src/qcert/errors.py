"""Exception types shared across the package."""


class QcertError(Exception):
    """Base class for all package-specific errors."""


class NonUnitConstantTerm(QcertError):
    """Series inversion requires an invertible constant term."""


class DivergentProduct(QcertError):
    """Infinite product whose factors do not eventually truncate."""


class ZeroDenominator(QcertError):
    """A summed denominator evaluates to zero (e.g. 1 - q^0)."""


class RepeatedOddPart(QcertError):
    """Partition violates the distinct-odd-parts restriction."""


class BoundExceeded(QcertError):
    """Requested weight exceeds the configured enumeration bound."""


class UnknownFormId(QcertError):
    """No closed form registered under the requested id."""


class UnsupportedSpecialization(QcertError):
    """The requested specialization family is out of scope."""


class InsufficientOrder(QcertError):
    """Truncation order too small to sample the check's progression."""


class EnumBoundExceeded(QcertError):
    """Check needs enumeration beyond the configured limits."""
