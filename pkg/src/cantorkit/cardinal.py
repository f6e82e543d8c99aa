"""Symbolic cardinals: finite values, alephs and beths.

Arithmetic follows absorption (an infinite sum or nonzero product equals the
larger operand).  Comparisons that ZFC cannot settle come back as
``CardCmp.UNDETERMINED`` instead of guessing.  The ``GCH`` mode goes past CH
by setting 2^aleph(k) = aleph(k+1) for every k.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IncomparableOperands, Unrepresentable


class Mode(enum.Enum):
    BASE = "base"
    CH = "ch"
    GCH = "gch"


class CardCmp(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNDETERMINED = "undetermined"

    def flip(self) -> CardCmp:
        return {CardCmp.LESS: CardCmp.GREATER, CardCmp.GREATER: CardCmp.LESS}.get(self, self)


@dataclass(frozen=True, order=False)
class Cardinal:
    """``kind`` is one of "finite", "aleph", "beth"; ``value`` the size or index."""

    kind: str
    value: int

    def __post_init__(self):
        if self.kind not in ("finite", "aleph", "beth"):
            raise ValueError(f"unknown cardinal kind {self.kind!r}")
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError("cardinal value must be a nonnegative integer")
        if self.kind == "beth" and self.value == 0:
            object.__setattr__(self, "kind", "aleph")

    @property
    def infinite(self) -> bool:
        return self.kind != "finite"

    def __str__(self):
        if self.kind == "finite":
            return str(self.value)
        return f"{self.kind}({self.value})"


def Finite(n: int) -> Cardinal:
    return Cardinal("finite", n)


def Aleph(k: int) -> Cardinal:
    return Cardinal("aleph", k)


def Beth(k: int) -> Cardinal:
    return Cardinal("beth", k)


def _mode(m) -> Mode:
    return m if isinstance(m, Mode) else Mode(m)


def normalize(a: Cardinal, mode=Mode.BASE) -> Cardinal:
    """Rewrite beths that the mode identifies with alephs."""
    mode = _mode(mode)
    if a.kind == "beth":
        if mode is Mode.GCH or (mode is Mode.CH and a.value == 1):
            return Aleph(a.value)
    return a


def _cmp_int(x, y) -> CardCmp:
    return CardCmp.LESS if x < y else CardCmp.GREATER if x > y else CardCmp.EQUAL


def card_cmp(a: Cardinal, b: Cardinal, mode=Mode.BASE) -> CardCmp:
    mode = _mode(mode)
    a, b = normalize(a, mode), normalize(b, mode)
    if not a.infinite or not b.infinite:
        if a.infinite:
            return CardCmp.GREATER
        if b.infinite:
            return CardCmp.LESS
        return _cmp_int(a.value, b.value)
    if a.kind == b.kind:
        return _cmp_int(a.value, b.value)
    if a.kind == "beth":
        return card_cmp(b, a, mode).flip()
    # aleph(j) vs beth(k), k >= 1 after normalization; ZFC proves aleph(k) <= beth(k)
    j, k = a.value, b.value
    if j < k:
        return CardCmp.LESS
    return CardCmp.UNDETERMINED


def provably_le(a: Cardinal, b: Cardinal, mode=Mode.BASE) -> bool:
    """Whether a <= b is provable (in the mode's theory)."""
    mode = _mode(mode)
    c = card_cmp(a, b, mode)
    if c in (CardCmp.LESS, CardCmp.EQUAL):
        return True
    a, b = normalize(a, mode), normalize(b, mode)
    return c is CardCmp.UNDETERMINED and a.kind == "aleph" and b.kind == "beth" and a.value <= b.value


def _weak_max(a: Cardinal, b: Cardinal, mode: Mode) -> Cardinal:
    na, nb = normalize(a, mode), normalize(b, mode)
    if provably_le(na, nb, mode):
        return nb
    if provably_le(nb, na, mode):
        return na
    raise IncomparableOperands(f"neither {a} nor {b} provably dominates in {mode.value} mode")


def _result(c: Cardinal, mode: Mode) -> Cardinal:
    return normalize(c, mode) if mode is Mode.GCH else c


def card_add(a: Cardinal, b: Cardinal, mode=Mode.BASE) -> Cardinal:
    mode = _mode(mode)
    if not a.infinite and not b.infinite:
        return Finite(a.value + b.value)
    if not a.infinite:
        return _result(b, mode)
    if not b.infinite:
        return _result(a, mode)
    return _result(_weak_max(a, b, mode), mode)


def card_mul(a: Cardinal, b: Cardinal, mode=Mode.BASE) -> Cardinal:
    mode = _mode(mode)
    if not a.infinite and not b.infinite:
        return Finite(a.value * b.value)
    if a == Finite(0) or b == Finite(0):
        return Finite(0)
    if not a.infinite:
        return _result(b, mode)
    if not b.infinite:
        return _result(a, mode)
    return _result(_weak_max(a, b, mode), mode)


def card_pow2(a: Cardinal, mode=Mode.BASE) -> Cardinal:
    mode = _mode(mode)
    if a.kind == "finite":
        return Finite(2 ** a.value)
    if mode is Mode.GCH:
        return Aleph(normalize(a, mode).value + 1)
    if a.kind == "beth":
        return Beth(a.value + 1)
    if a.value == 0:
        return Aleph(1) if mode is Mode.CH else Beth(1)
    if mode is Mode.CH and a.value == 1:
        # aleph(1) = beth(1) under CH
        return Beth(2)
    raise Unrepresentable(f"2^{a} has no name outside GCH")
