"""Shared error types.

The CLI maps these onto exit codes: ParseError -> 1, DomainViolation and
its subclasses -> 2.  Verification mismatches are reported through return
values, not exceptions, and exit with code 3.
"""


class DomainViolation(ValueError):
    """An operation was asked for outside its mathematical domain."""


class SpecMismatch(DomainViolation):
    """Operands belong to different coefficient rings."""


class NotAUnit(DomainViolation):
    """Inversion of a non-invertible ring element."""


class NotCoprime(DomainViolation):
    """A coprimality precondition failed (moduli, prime vs level)."""


class NotSplit(DomainViolation):
    """A polynomial does not split within the allowed extension degree."""


class RamifiedPrime(DomainViolation):
    """The prime ramifies in the field, so the fiber theory does not apply."""


class EqualPrimes(DomainViolation):
    """Two primes that must be distinct coincide."""


class UnsupportedRing(DomainViolation):
    """The coefficient ring does not support the requested operation."""


class ParseError(ValueError):
    """A literal (polynomial, ring name, ...) could not be parsed."""
