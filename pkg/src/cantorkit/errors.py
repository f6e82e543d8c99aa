"""Exception hierarchy.

Every error raised by the library derives from :class:`CantorkitError`.
Parse failures derive from :class:`ParseError`; everything else is a
:class:`DomainError` (the CLI maps these to exit codes 1 and 2).
"""


class CantorkitError(Exception):
    pass


class ParseError(CantorkitError, ValueError):
    """Malformed textual input.

    ``offset`` is the byte offset of the failure, ``expected`` the set of
    tokens that would have been accepted there.
    """

    def __init__(self, message, offset=None, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = message
        if offset is not None:
            detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class DomainError(CantorkitError):
    pass


# setcore
class MalformedMap(DomainError):
    pass


class MalformedRelation(DomainError):
    pass


class NotBijective(DomainError):
    def __init__(self, message, collision=None, unhit=None):
        self.collision = collision
        self.unhit = unhit
        super().__init__(message)


class NotInjective(DomainError):
    def __init__(self, message, name=None, collision=None):
        self.name = name
        self.collision = collision
        super().__init__(message)


class NotSubset(DomainError):
    pass


class NotLinear(DomainError):
    pass


class FuelExhausted(DomainError):
    pass


class NoPreimage(DomainError):
    pass


class TooLarge(DomainError):
    pass


# cardinal
class IncomparableOperands(DomainError):
    pass


class Unrepresentable(DomainError):
    pass


# ordinal
class NonCanonical(DomainError):
    pass


class OrdinalDepthError(DomainError):
    pass


class EmptyFamily(DomainError):
    pass


# abgroup
class InfiniteQuotient(DomainError):
    pass


class FactorTooLarge(DomainError):
    pass


# ringpoly
class RingMismatch(DomainError):
    pass


class PrecisionMismatch(DomainError):
    pass


class NotDomain(DomainError):
    """Z/n has zero divisors; ``witness`` is a pair (a, b) with a*b = 0."""

    def __init__(self, n, witness):
        self.n = n
        self.witness = witness
        super().__init__(f"Z/{n} is not an integral domain: {witness[0]}*{witness[1]} = 0")


class NotAscending(DomainError):
    pass


class NotYetStationary(DomainError):
    pass


# modlin
class DimensionMismatch(DomainError):
    pass


class NotIndependent(DomainError):
    pass


class NotExact(DomainError):
    pass


class NoSection(DomainError):
    pass
