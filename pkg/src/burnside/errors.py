"""Exception types shared across the package.

Every error raised by the library derives from BurnsideError, so callers
(notably the CLI) can distinguish computation failures from bugs.
"""


class BurnsideError(Exception):
    """Base class for all library errors."""


class MalformedCycle(BurnsideError):
    """A generator cycle reuses a point or moves a point outside the domain."""


class GroupTooLarge(BurnsideError):
    """Closure or subgroup enumeration exceeded the configured cap."""


class UnknownSpec(BurnsideError):
    """A group spec string does not match the catalog grammar."""


class NotASubgroup(BurnsideError):
    """The given element set is not a subgroup of the given group."""


class GroupMismatch(BurnsideError):
    """Operands belong to different groups or class tables."""


class InexactDivision(BurnsideError):
    """A division that must be exact left a remainder (internal inconsistency)."""


class NotIntegral(BurnsideError):
    """A ghost vector has no integral preimage; a legitimate outcome."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"no integral solution at class index {index}")


class CapExceeded(BurnsideError):
    """The input is larger than the configured enumeration cap."""


class NonIntegralIndicator(BurnsideError):
    """A Frobenius-Schur indicator failed to round to an integer."""


class NonIntegralDimension(BurnsideError):
    """A fixed-point dimension failed to round to an integer."""


class NonIntegralMultiplicity(BurnsideError):
    """A permutation-character multiplicity failed to round to an integer."""


class UnpairedComplexCharacter(BurnsideError):
    """A complex-type character has no conjugate partner row (internal failure)."""


class SingularBlock(BurnsideError):
    """A spectral block has eigenvalue zero, so it is not an isomorphism."""


class NotAUnit(BurnsideError):
    """The element is not invertible in the Burnside ring."""


class NoSolution(BurnsideError):
    """The parity congruence system is inconsistent.

    Carries a certificate: indices of class rows whose mod-2 sum has zero
    coefficients but right-hand side one.  ``delta`` and ``coeffs`` are
    attached when raised while factoring a concrete unit.
    """

    def __init__(self, certificate: tuple[int, ...], delta=None, coeffs=None):
        self.certificate = certificate
        self.delta = delta
        self.coeffs = coeffs
        super().__init__(f"parity system inconsistent; certificate rows {list(certificate)}")
