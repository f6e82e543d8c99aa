"""Ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of ``(exponent, coefficient)`` terms with exponents
strictly decreasing.  Every algorithm here recurses on exponents, which are
structurally smaller, so the recursion is well founded; that recursion is the
only form transfinite induction takes in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Union

from .cardinal import Aleph, Cardinal, Finite
from .errors import EmptyFamily, NonCanonical, OrdinalDepthError

MAX_DEPTH = 64


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@total_ordering
@dataclass(frozen=True, eq=True)
class Ordinal:
    terms: tuple = ()

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        depth = 0
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, Ordinal):
                raise NonCanonical(f"exponent {e!r} is not an ordinal")
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                raise NonCanonical(f"coefficient {c!r} must be a positive integer")
            if i and ord_cmp(terms[i - 1][0], e) is not Cmp.GREATER:
                raise NonCanonical("exponents must be strictly decreasing")
            depth = max(depth, e.depth + 1)
        if depth > MAX_DEPTH:
            raise OrdinalDepthError(f"exponent tower deeper than {MAX_DEPTH}")
        object.__setattr__(self, "depth", depth)

    # comparisons go through ord_cmp so that ints compare too
    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ord_cmp(self, other) is Cmp.LESS

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_add(self, other)

    def __radd__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_add(other, self)

    def __mul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_mul(other, self)

    def __pow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_pow(self, other)

    def __rpow__(self, other):
        other = _coerce(other)
        return NotImplemented if other is NotImplemented else ord_pow(other, self)

    def __bool__(self):
        return bool(self.terms)

    @classmethod
    def of(cls, n: int) -> Ordinal:
        if n < 0:
            raise NonCanonical("ordinals are nonnegative")
        return cls(((ZERO, n),)) if n else ZERO

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def finite_value(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def is_limit(self) -> bool:
        return bool(self.terms) and bool(self.terms[-1][0])

    def leading_exponent(self) -> Ordinal:
        return self.terms[0][0] if self.terms else ZERO

    def split_finite(self):
        """(limit part, finite part) with self = limit + finite."""
        if self.terms and not self.terms[-1][0]:
            return Ordinal(self.terms[:-1]), self.terms[-1][1]
        return self, 0

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Ordinal({render(self)!r})"


ZERO = Ordinal(())
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def _coerce(x):
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.of(x)
    return NotImplemented


def omega_power(e: Ordinal, c: int = 1) -> Ordinal:
    return Ordinal(((e, c),))


def ord_cmp(a: Ordinal, b: Ordinal) -> Cmp:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c is not Cmp.EQUAL:
            return c
        if ca != cb:
            return Cmp.LESS if ca < cb else Cmp.GREATER
    if len(a.terms) == len(b.terms):
        return Cmp.EQUAL
    return Cmp.LESS if len(a.terms) < len(b.terms) else Cmp.GREATER


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return a
    lead, c = b.terms[0]
    kept = []
    for e, k in a.terms:
        r = ord_cmp(e, lead)
        if r is Cmp.GREATER:
            kept.append((e, k))
        elif r is Cmp.EQUAL:
            kept.append((e, k + c))
            return Ordinal(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def _mul_term(a: Ordinal, e: Ordinal, c: int) -> Ordinal:
    """a * omega^e * c for nonzero a."""
    if not e.terms:
        lead, k = a.terms[0]
        return Ordinal(((lead, k * c),) + a.terms[1:])
    return omega_power(ord_add(a.leading_exponent(), e), c)


def ord_mul(a: Ordinal, b: Ordinal) -> Ordinal:
    if not a.terms or not b.terms:
        return ZERO
    out = ZERO
    for e, c in b.terms:
        out = ord_add(out, _mul_term(a, e, c))
    return out


def _finite_pow(a: Ordinal, n: int) -> Ordinal:
    result, base = ONE, a
    while n:
        if n & 1:
            result = ord_mul(result, base)
        n >>= 1
        if n:
            base = ord_mul(base, base)
    return result


def _minus_one_plus(e: Ordinal) -> Ordinal:
    """The ordinal g with 1 + g = e, for e >= 1."""
    if e.is_finite():
        return Ordinal.of(e.finite_value() - 1)
    return e


def ord_pow(a: Ordinal, b: Ordinal) -> Ordinal:
    if not b.terms:
        return ONE
    if not a.terms:
        return ZERO
    if a == ONE:
        return ONE
    if len(a.terms) == 1 and a.terms[0][1] == 1 and a.terms[0][0]:
        # (w^e)^b = w^(e*b)
        return omega_power(ord_mul(a.terms[0][0], b))
    limit, m = b.split_finite()
    if a.is_finite():
        n = a.finite_value()
        if not limit.terms:
            return Ordinal.of(n ** m)
        # n^(omega^f * d) = omega^(omega^(f') * d) with 1 + f' = f
        expo = Ordinal(tuple((_minus_one_plus(f), d) for f, d in limit.terms))
        return omega_power(expo, n ** m)
    head = omega_power(ord_mul(a.leading_exponent(), limit)) if limit.terms else ONE
    return ord_mul(head, _finite_pow(a, m))


def ord_sup(xs: Iterable[Ordinal]) -> Ordinal:
    xs = list(xs)
    if not xs:
        raise EmptyFamily("sup of an empty family")
    best = xs[0]
    for x in xs[1:]:
        if ord_cmp(x, best) is Cmp.GREATER:
            best = x
    return best


def ord_cardinality(a: Ordinal) -> Cardinal:
    return Finite(a.finite_value()) if a.is_finite() else Aleph(0)


# order-type expressions

@dataclass(frozen=True)
class Fin:
    n: int


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class Concat:
    left: "WellOrderExpr"
    right: "WellOrderExpr"


@dataclass(frozen=True)
class LexProd:
    """``times``-many copies of ``base``: pairs compared on the times-coordinate first."""

    base: "WellOrderExpr"
    times: "WellOrderExpr"


WellOrderExpr = Union[Fin, Omega, Concat, LexProd]


def order_type(e: WellOrderExpr) -> Ordinal:
    if isinstance(e, Fin):
        return Ordinal.of(e.n)
    if isinstance(e, Omega):
        return OMEGA
    if isinstance(e, Concat):
        return ord_add(order_type(e.left), order_type(e.right))
    if isinstance(e, LexProd):
        return ord_mul(order_type(e.base), order_type(e.times))
    raise TypeError(f"not a well-order expression: {e!r}")


# rendering

def _render_power(e: Ordinal) -> str:
    if e == ONE:
        return "w"
    if e.is_finite():
        return f"w^{e.finite_value()}"
    inner = render(e)
    if len(e.terms) == 1 and e.terms[0][1] == 1 and e.terms[0][0] == ONE:
        return f"w^{inner}"
    return f"w^({inner})"


def render(a: Ordinal) -> str:
    """Canonical text, e.g. ``w^w + w*2 + 3``."""
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if not e.terms:
            parts.append(str(c))
        else:
            p = _render_power(e)
            parts.append(p if c == 1 else f"{p}*{c}")
    return " + ".join(parts)
