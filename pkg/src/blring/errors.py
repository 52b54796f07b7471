"""Exception hierarchy shared by every module of the package."""


class BLRingError(Exception):
    """Base class for all errors raised by :mod:`blring`."""


class CapExceeded(BLRingError):
    """A configured size cap (ring order, census order) would be exceeded."""


# Ring-level names used across the codebase.
OrderCapExceeded = CapExceeded


class NonMonic(BLRingError):
    pass


class NotAnIdeal(BLRingError):
    pass


class NotCoprime(BLRingError):
    pass


class RingMismatch(BLRingError):
    pass


class NoProperIdeals(BLRingError):
    """Raised for the one-element ring, whose ideal lattice collapses."""


class AlgebraError(BLRingError):
    """Structural failure of a finite algebra, carrying the violated law and a witness."""

    def __init__(self, message, law=None, witness=None):
        super().__init__(message)
        self.law = law
        self.witness = tuple(witness) if witness is not None else None


class NotALattice(AlgebraError):
    pass


class NotResiduated(AlgebraError):
    pass


class NotAMonoid(NotResiduated):
    # a table that is not a commutative monoid cannot be part of a residuated lattice
    pass


class NoMaximum(NotResiduated):
    pass


class NotBL(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class ParseError(BLRingError):
    pass
