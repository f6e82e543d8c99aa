"""Finitely generated abelian groups from integer presentation matrices.

A t x n matrix presents Z^n modulo the lattice spanned by its rows.  All
arithmetic uses Python ints, so entries may grow without bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import List, Sequence

from .errors import FactorTooLarge, InfiniteQuotient, TooLarge

Matrix = List[List[int]]

FACTOR_BOUND = 2 ** 40
QUOTIENT_BOUND = 10 ** 5


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    if A and len(A[0]) != inner:
        raise ValueError("shape mismatch")
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def transpose(A: Matrix, cols: int = None) -> Matrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*A)]


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _shape(A: Sequence[Sequence[int]], cols: int = None):
    rows = len(A)
    n = len(A[0]) if rows else (cols or 0)
    if cols is not None and rows and n != cols:
        raise ValueError(f"expected {cols} columns, got {n}")
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not rectangular")
    return rows, n


@dataclass(frozen=True)
class SmithForm:
    U: Matrix
    D: Matrix
    V: Matrix
    diag: tuple

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith_normal_form(A: Sequence[Sequence[int]], cols: int = None) -> SmithForm:
    """U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.

    Pivot: the nonzero entry of least absolute value in the active block,
    ties broken by lowest row then lowest column.  ``cols`` fixes the width
    of an empty matrix.
    """
    t, n = _shape(A, cols)
    M = [list(map(int, r)) for r in A]
    U, V = identity(t), identity(n)

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        if q:
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]
            U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        if q:
            for row in M:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    for s in range(min(t, n)):
        while True:
            best = None
            for i in range(s, t):
                for j in range(s, n):
                    v = abs(M[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(s, pi)
            swap_cols(s, pj)
            p = M[s][s]
            dirty = False
            for i in range(s + 1, t):
                if M[i][s]:
                    add_row(i, s, -(M[i][s] // p))
                    dirty = dirty or M[i][s] != 0
            for j in range(s + 1, n):
                if M[s][j]:
                    add_col(j, s, -(M[s][j] // p))
                    dirty = dirty or M[s][j] != 0
            if dirty:
                continue
            # divisibility repair: pull a non-multiple of the pivot into row s
            bad = next((i for i in range(s + 1, t) for j in range(s + 1, n) if M[i][j] % p), None)
            if bad is None:
                break
            add_row(s, bad, 1)
        if best is None:
            break
        if M[s][s] < 0:
            M[s] = [-a for a in M[s]]
            U[s] = [-a for a in U[s]]
    diag = tuple(M[i][i] for i in range(min(t, n)))
    return SmithForm(U, M, V, diag)


@dataclass(frozen=True)
class AbGroupClass:
    torsion: tuple
    free_rank: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for m in self.torsion:
            if m <= 1:
                raise ValueError("torsion coefficients must exceed 1")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def order(self):
        """Group order, or None when infinite."""
        return None if self.free_rank else prod(self.torsion)

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "rank": self.free_rank}

    def __str__(self):
        parts = [f"Z/{m}" for m in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def classify(A: Sequence[Sequence[int]], cols: int = None) -> AbGroupClass:
    t, n = _shape(A, cols)
    snf = smith_normal_form(A, n)
    torsion = [d for d in snf.diag if d > 1]
    zeros = sum(1 for d in snf.diag if d == 0) + (n - len(snf.diag))
    return AbGroupClass(tuple(torsion), zeros)


def are_isomorphic(A, B, cols_a: int = None, cols_b: int = None) -> bool:
    return classify(A, cols_a) == classify(B, cols_b)


def presentation_of(c: AbGroupClass) -> Matrix:
    """Diagonal presentation realising a class."""
    n = len(c.torsion) + c.free_rank
    return [[m if j == i else 0 for j in range(n)] for i, m in enumerate(c.torsion)]


def factorize(n: int, bound: int = FACTOR_BOUND) -> dict:
    if n > bound:
        raise FactorTooLarge(f"{n} exceeds the trial-division bound {bound}")
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def elementary_divisors(c: AbGroupClass) -> list:
    """Prime-power decomposition of the torsion, sorted by (prime, power)."""
    out = []
    for m in c.torsion:
        for p, e in factorize(m).items():
            out.append(p ** e)
    return sorted(out, key=lambda q: (min(factorize(q)), q))


def invariant_factors(prime_powers: Sequence[int]) -> tuple:
    """Inverse of :func:`elementary_divisors`: regroup prime powers into m_1 | ... | m_t."""
    by_prime = {}
    for q in prime_powers:
        f = factorize(q)
        if len(f) != 1:
            raise ValueError(f"{q} is not a prime power")
        by_prime.setdefault(next(iter(f)), []).append(q)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[width - 1 - i] *= q
    return tuple(factors)


INFINITE = "infinite"


def cyclic_classify(order) -> AbGroupClass:
    """``order`` is ``INFINITE`` or a positive int m."""
    if order == INFINITE:
        return AbGroupClass((), 1)
    if order < 1:
        raise ValueError("a finite cyclic group has order at least 1")
    return AbGroupClass((order,) if order > 1 else (), 0)


def element_order(modulus: int, a: int):
    """Order of ``a`` in Z/modulus; modulus 0 means Z."""
    if modulus == 0:
        return 1 if a == 0 else INFINITE
    return modulus // gcd(a, modulus)


@dataclass(frozen=True)
class CosetTable:
    """Canonical coset representatives of a finite Z^n / L.

    Cosets are indexed by mixed-radix tuples over the invariant factors
    ``moduli``; ``representatives[i]`` is a vector of Z^n in coset i.
    """

    moduli: tuple
    representatives: list
    _V: Matrix = field(repr=False)
    _slots: tuple = field(repr=False)

    def __len__(self):
        return len(self.representatives)

    def coordinates(self, x: Sequence[int]) -> tuple:
        y = [sum(x[k] * self._V[k][j] for k in range(len(x))) for j in range(len(self._V[0]) if self._V else 0)]
        return tuple(y[j] % m for j, m in zip(self._slots, self.moduli))

    def index(self, x: Sequence[int]) -> int:
        idx = 0
        for c, m in zip(self.coordinates(x), self.moduli):
            idx = idx * m + c
        return idx

    def add(self, i: int, j: int) -> int:
        a, b = self.representatives[i], self.representatives[j]
        return self.index([p + q for p, q in zip(a, b)])


def _inverse_unimodular(V: Matrix) -> Matrix:
    from fractions import Fraction

    n = len(V)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(V)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = [[int(x) for x in row[n:]] for row in M]
    return out


def quotient_enumerate(A: Sequence[Sequence[int]], cols: int = None,
                       bound: int = QUOTIENT_BOUND) -> CosetTable:
    t, n = _shape(A, cols)
    snf = smith_normal_form(A, n)
    c = classify(A, n)
    if c.free_rank:
        raise InfiniteQuotient(f"quotient has free rank {c.free_rank}")
    order = prod(c.torsion)
    if order > bound:
        raise TooLarge(f"quotient of order {order} exceeds {bound}")
    slots = tuple(i for i, d in enumerate(snf.diag) if d > 1)
    moduli = tuple(snf.diag[i] for i in slots)
    Vinv = _inverse_unimodular(snf.V) if n else []
    reps = []
    for idx in range(order):
        digits, rem = [], idx
        for m in reversed(moduli):
            digits.append(rem % m)
            rem //= m
        digits.reverse()
        y = [0] * n
        for s, d in zip(slots, digits):
            y[s] = d
        reps.append(tuple(sum(y[k] * Vinv[k][j] for k in range(n)) for j in range(n)))
    return CosetTable(moduli, reps, snf.V, slots)


def hermite_normal_form(rows: Sequence[Sequence[int]], cols: int = None) -> Matrix:
    """Row-style HNF of the lattice spanned by ``rows`` (zero rows dropped).

    Pivots are positive and entries above each pivot are reduced into
    [0, pivot).  Two row sets span the same lattice iff their HNFs agree.
    """
    t, n = _shape(rows, cols)
    M = [list(map(int, r)) for r in rows]
    out_rows = 0
    for c in range(n):
        active = list(range(out_rows, len(M)))
        while True:
            nz = [i for i in active if M[i][c]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: (abs(M[i][c]), i))
            for i in nz:
                if i != piv:
                    q = M[i][c] // M[piv][c]
                    M[i] = [a - q * b for a, b in zip(M[i], M[piv])]
        nz = [i for i in active if M[i][c]]
        if not nz:
            continue
        p = nz[0]
        M[out_rows], M[p] = M[p], M[out_rows]
        if M[out_rows][c] < 0:
            M[out_rows] = [-a for a in M[out_rows]]
        for i in range(out_rows):
            q = M[i][c] // M[out_rows][c]
            M[i] = [a - q * b for a, b in zip(M[i], M[out_rows])]
        out_rows += 1
    return [r for r in M[:out_rows]]


@dataclass(frozen=True)
class KernelImage:
    kernel_basis: Matrix
    image_basis: Matrix
    cokernel: AbGroupClass
    coimage: AbGroupClass
    first_iso_holds: bool

    @property
    def kernel_rank(self) -> int:
        return len(self.kernel_basis)


def hom_kernel_image(M: Sequence[Sequence[int]], n: int = None) -> KernelImage:
    """Kernel and image of x -> M x for a k x n integer matrix M.

    ``cokernel`` classifies Z^k / im M; ``coimage`` classifies Z^n / ker M,
    which must agree with im M (free of rank r) by the first isomorphism
    theorem; ``first_iso_holds`` records that check.
    """
    k, n = _shape(M, n)
    snf = smith_normal_form(M, n)
    r = snf.rank
    kernel = [[snf.V[i][j] for i in range(n)] for j in range(r, n)]
    image_cols = transpose(M, n) if k else [[] for _ in range(n)]
    image_basis = hermite_normal_form(image_cols, k)
    cokernel = classify(transpose(M, n) if k else [], k)
    coimage = classify(kernel, n)
    first_iso = coimage == AbGroupClass((), len(image_basis)) and len(image_basis) == r
    return KernelImage(kernel, image_basis, cokernel, coimage, first_iso)


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int], n: int = None):
    """An integer solution x of A x = b, or None if there is none."""
    k, n = _shape(A, n)
    if len(b) != k:
        raise ValueError("right-hand side has the wrong length")
    snf = smith_normal_form(A, n)
    c = [sum(snf.U[i][j] * b[j] for j in range(k)) for i in range(k)]
    y = [0] * n
    for i in range(k):
        d = snf.diag[i] if i < len(snf.diag) else 0
        if d == 0:
            if c[i]:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return [sum(snf.V[i][j] * y[j] for j in range(n)) for i in range(n)]
