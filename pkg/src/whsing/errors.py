"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input data violates a documented precondition."""


class InvalidLeg(ValidationError):
    """A leg (alpha, omega) is out of range or not coprime."""


class NotNegativeDefinite(ValidationError):
    """The orbifold Euler number is >= 0, so the intersection form is not negative definite."""


class TooManyLegs(ValidationError):
    """The combinatorial layer caps the number of legs (monomial masks are bit-packed)."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree disagreed; indicates a bug, never bad input."""


class OracleCapExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured size cap."""


class InadmissibleParams(ValidationError):
    """Parameter values must be nonzero and pairwise distinct."""
