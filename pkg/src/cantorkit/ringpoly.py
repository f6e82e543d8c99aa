"""Exact base rings, polynomials, truncated power series and PID ideals.

Base rings are Z, Q, Z/n and GF(p).  Z/n is only ever a ring; GF(p) is a
separate spec gated on primality, so nothing silently becomes a field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Sequence

from . import kernels
from .errors import (
    NotAscending,
    NotDomain,
    NotYetStationary,
    ParseError,
    PrecisionMismatch,
    RingMismatch,
    TooLarge,
)

FINITE_RING_BOUND = 10 ** 6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """``kind`` is "Z", "Q", "mod" (Z/n) or "gf" (GF(p))."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.modulus:
                raise ValueError(f"{self.kind} takes no modulus")
        elif self.kind == "mod":
            if self.modulus < 2:
                raise ValueError("Z/n needs n >= 2")
        elif self.kind == "gf":
            if not is_prime(self.modulus):
                raise ValueError(f"GF({self.modulus}): modulus is not prime")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        t = text.strip()
        if t in ("Z", "ZZ"):
            return cls("Z")
        if t in ("Q", "QQ"):
            return cls("Q")
        m = re.fullmatch(r"Z/\(?(\d+)\)?", t) or re.fullmatch(r"Z/(\d+)Z", t)
        if m:
            return cls("mod", int(m.group(1)))
        m = re.fullmatch(r"GF\((\d+)\)", t)
        if m:
            p = int(m.group(1))
            if not is_prime(p):
                raise ParseError(f"GF({p}) needs a prime modulus")
            return cls("gf", p)
        raise ParseError(f"unknown ring {text!r}", expected=("Z", "Q", "Z/<n>", "GF(<p>)"))

    def __str__(self):
        return {"Z": "Z", "Q": "Q", "mod": f"Z/{self.modulus}", "gf": f"GF({self.modulus})"}[self.kind]

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "gf")

    @property
    def is_domain(self) -> bool:
        return self.kind != "mod" or is_prime(self.modulus)

    @property
    def modular(self) -> bool:
        return self.kind in ("mod", "gf")

    def __call__(self, x):
        """Coerce an int (or Fraction, for Q) into the ring."""
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return int(x)
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus
        return int(x) % self.modulus

    zero = property(lambda self: self(0))
    one = property(lambda self: self(1))

    def add(self, a, b):
        return (a + b) % self.modulus if self.modular else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.modular else a - b

    def neg(self, a):
        return (-a) % self.modulus if self.modular else -a

    def mul(self, a, b):
        return (a * b) % self.modulus if self.modular else a * b

    def inv(self, a):
        if self.kind == "Q":
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return 1 / Fraction(a)
        if self.modular:
            return pow(a, -1, self.modulus)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def render(self, a) -> str:
        return str(a)


Z = RingSpec("Z")
Q = RingSpec("Q")


def ModN(n: int) -> RingSpec:
    return RingSpec("mod", n)


def GF(p: int) -> RingSpec:
    return RingSpec("gf", p)


@total_ordering
@dataclass(frozen=True)
class Degree:
    """Polynomial degree; ``value`` None stands for minus infinity."""

    value: int = None

    @property
    def is_neg_infinity(self) -> bool:
        return self.value is None

    def __add__(self, other):
        other = other if isinstance(other, Degree) else Degree(other)
        if self.value is None or other.value is None:
            return NEG_INFINITY
        return Degree(self.value + other.value)

    __radd__ = __add__

    def __lt__(self, other):
        other = other if isinstance(other, Degree) else Degree(other)
        if self.value is None:
            return other.value is not None
        return other.value is not None and self.value < other.value

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        if isinstance(other, Degree):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return "-inf" if self.value is None else str(self.value)


NEG_INFINITY = Degree(None)


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _convolve(ring: RingSpec, a, b, length=None):
    if ring.modular:
        if length is None:
            return kernels.conv_mod(a, b, ring.modulus)
        return kernels.conv_mod_trunc(a, b, ring.modulus, length)
    if not a or not b:
        return [] if length is None else [ring.zero] * length
    size = len(a) + len(b) - 1 if length is None else length
    out = [ring.zero] * size
    for i, x in enumerate(a[:size]):
        if x:
            for j, y in enumerate(b[: size - i]):
                out[i + j] += x * y
    return out


@dataclass(frozen=True)
class Polynomial:
    ring: RingSpec
    coeffs: tuple

    def __init__(self, ring: RingSpec, coeffs: Sequence = ()):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", _trim(ring(c) for c in coeffs))

    @classmethod
    def parse(cls, ring: RingSpec, text: str) -> Polynomial:
        return cls(ring, parse_poly_coeffs(text, ring))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def __add__(self, other):
        return poly_add(self, other)

    def __sub__(self, other):
        return poly_sub(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __neg__(self):
        return Polynomial(self.ring, [self.ring.neg(c) for c in self.coeffs])

    def __call__(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = self.ring.add(self.ring.mul(acc, x), c)
        return acc

    def __str__(self):
        return render_poly(self.coeffs)


def _same_ring(f, g):
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(f.ring, [f.ring.add(f[i], g[i]) for i in range(n)])


def poly_sub(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(f.ring, [f.ring.sub(f[i], g[i]) for i in range(n)])


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Convolution c_n = sum_{i=0}^n a_{n-i} b_i."""
    _same_ring(f, g)
    return Polynomial(f.ring, _convolve(f.ring, list(f.coeffs), list(g.coeffs)))


def poly_deg(f: Polynomial) -> Degree:
    return Degree(len(f.coeffs) - 1) if f.coeffs else NEG_INFINITY


def poly_divmod(f: Polynomial, g: Polynomial):
    """Euclidean division; g's leading coefficient must be invertible."""
    _same_ring(f, g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    R = f.ring
    lead_inv = R.inv(g.leading())
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    quo = [R.zero] * max(len(rem) - dg, 0)
    while len(rem) - 1 >= dg and rem:
        shift = len(rem) - 1 - dg
        c = R.mul(rem[-1], lead_inv)
        quo[shift] = c
        for i, gc in enumerate(g.coeffs):
            rem[shift + i] = R.sub(rem[shift + i], R.mul(c, gc))
        rem = list(_trim(rem))
    return Polynomial(R, quo), Polynomial(R, rem)


def monic(f: Polynomial) -> Polynomial:
    if f.is_zero():
        return f
    inv = f.ring.inv(f.leading())
    return Polynomial(f.ring, [f.ring.mul(c, inv) for c in f.coeffs])


# formal power series truncated at a fixed precision

@dataclass(frozen=True)
class TruncatedSeries:
    ring: RingSpec
    precision: int
    coeffs: tuple

    def __init__(self, ring: RingSpec, precision: int, coeffs: Sequence = ()):
        if precision < 1:
            raise ValueError("precision must be at least 1")
        coeffs = [ring(c) for c in coeffs[:precision]]
        coeffs += [ring.zero] * (precision - len(coeffs))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_polynomial(cls, f: Polynomial, precision: int) -> TruncatedSeries:
        return cls(f.ring, precision, f.coeffs)

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.ring, self.coeffs)

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __str__(self):
        body = render_poly(self.coeffs)
        return f"O(x^{self.precision})" if body == "0" else f"{body} + O(x^{self.precision})"


def _check_series(f, g):
    if f.ring != g.ring:
        raise RingMismatch(f"{f.ring} vs {g.ring}")
    if f.precision != g.precision:
        raise PrecisionMismatch(f"precision {f.precision} vs {g.precision}")


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_series(f, g)
    return TruncatedSeries(f.ring, f.precision, [f.ring.add(a, b) for a, b in zip(f.coeffs, g.coeffs)])


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    _check_series(f, g)
    return TruncatedSeries(f.ring, f.precision,
                           _convolve(f.ring, list(f.coeffs), list(g.coeffs), f.precision))


# finite rings Z/n

def _check_small(n):
    if n < 2:
        raise ValueError("Z/n needs n >= 2")
    if n > FINITE_RING_BOUND:
        raise TooLarge(f"n = {n} exceeds {FINITE_RING_BOUND}")


def units_and_zero_divisors(n: int):
    """Partition of the nonzero residues of Z/n into units and zero divisors."""
    _check_small(n)
    units, zds = [], []
    for a in range(1, n):
        (units if gcd(a, n) == 1 else zds).append(a)
    return units, zds


def zero_divisor_witness(n: int, a: int):
    """A nonzero b with a*b = 0 in Z/n, or None when a is a unit."""
    g = gcd(a, n)
    return None if g == 1 else n // g


def finite_domain_to_field(n: int) -> dict:
    """Inverse table of Z/n, built by scanning x -> a*x until it hits 1.

    Raises :class:`NotDomain` with a witness pair (a, b), a*b = 0, when Z/n
    has zero divisors.
    """
    _check_small(n)
    _, zds = units_and_zero_divisors(n)
    if zds:
        a = zds[0]
        raise NotDomain(n, (a, zero_divisor_witness(n, a)))
    table, failed = kernels.inverse_table(n)
    if table is None:
        raise NotDomain(n, (failed, zero_divisor_witness(n, failed)))
    return {a: table[a] for a in range(1, n)}


def maximal_ideals_modn(n: int) -> list:
    """Maximal ideals of Z/n as sorted generators d | n.

    Ideals of Z/n are (d) for d | n, with (d) inside (e) iff e | d; the
    maximal ones are found by exhaustive inclusion checks.
    """
    _check_small(n)
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    proper = [d for d in divisors if d != 1]
    return [d for d in proper if not any(e != d and d % e == 0 for e in proper)]


# principal ideals in Z and F[x]

@dataclass(frozen=True)
class IdealZ:
    generators: tuple

    def __init__(self, generators):
        gens = tuple(int(g) for g in generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        object.__setattr__(self, "generators", gens)

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"


@dataclass(frozen=True)
class IdealFx:
    ring: RingSpec
    generators: tuple

    def __init__(self, ring: RingSpec, generators):
        if not ring.is_field:
            raise ValueError(f"{ring} is not a field")
        gens = tuple(g if isinstance(g, Polynomial) else Polynomial(ring, g) for g in generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g in gens:
            if g.ring != ring:
                raise RingMismatch(f"generator over {g.ring}, ideal over {ring}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", gens)

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return monic(f)


def ideal_principal_generator(I):
    """Single generator: nonnegative in Z, monic (or 0) over a field."""
    if isinstance(I, IdealZ):
        g = 0
        for a in I.generators:
            g = gcd(g, a)
        return g
    g = Polynomial(I.ring, ())
    for f in I.generators:
        g = poly_gcd(g, f)
    return g


def ideal_member(a, I) -> bool:
    gen = ideal_principal_generator(I)
    if isinstance(I, IdealZ):
        return a == 0 if gen == 0 else a % gen == 0
    if not isinstance(a, Polynomial):
        a = Polynomial(I.ring, a)
    if gen.is_zero():
        return a.is_zero()
    return poly_divmod(a, gen)[1].is_zero()


def _contains(big, small) -> bool:
    return all(ideal_member(g, big) for g in small.generators)


def acc_stabilize(chain: Sequence) -> int:
    """Least N such that every later ideal of the finite chain equals I_N."""
    if not chain:
        raise ValueError("empty chain")
    for k in range(len(chain) - 1):
        if not _contains(chain[k + 1], chain[k]):
            raise NotAscending(f"ideal {k} is not contained in ideal {k + 1}")
    gens = [ideal_principal_generator(I) for I in chain]
    if len(gens) > 1 and gens[-1] != gens[-2]:
        raise NotYetStationary("the last step of the chain is still strict")
    N = len(gens) - 1
    while N > 0 and gens[N - 1] == gens[-1]:
        N -= 1
    return N


# text forms

_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*(x(?:\s*\^\s*(\d+))?)?\s*")


def parse_poly_coeffs(text: str, ring: RingSpec) -> list:
    """Parse ``a_k x^k + ... + a_0`` into a dense coefficient list."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", 0, ("<term>",))
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, star, xpart, power = m.groups()
        if not num and not xpart:
            raise ParseError("expected a term", pos, ("<integer>", "x"))
        if not first and not sign:
            raise ParseError("expected an operator", pos, ("+", "-"))
        if star and not (num and xpart):
            raise ParseError("dangling '*'", pos, ("<integer>", "x"))
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if xpart else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    try:
        return [ring(coeffs.get(i, 0)) for i in range(top + 1)]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"coefficient not in {ring}: {exc}") from None


def _render_coeff(c) -> str:
    return str(c)


def render_poly(coeffs: Sequence) -> str:
    """Ascending-power rendering, e.g. ``1 + 2x - x^2``."""
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if i == 0:
            body = _render_coeff(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{_render_coeff(mag)}{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"
