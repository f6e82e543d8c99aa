"""Exact, deterministic computations with sets, cardinals, ordinals and
finitely generated algebraic structures."""

from .cardinal import Aleph, Beth, Cardinal, CardCmp, Finite, Mode
from .kernels import BACKEND
from .ordinal import OMEGA, ONE, ZERO, Ordinal

__all__ = [
    "Aleph", "Beth", "Cardinal", "CardCmp", "Finite", "Mode",
    "OMEGA", "ONE", "ZERO", "Ordinal", "BACKEND",
]

__version__ = "0.1.0"
