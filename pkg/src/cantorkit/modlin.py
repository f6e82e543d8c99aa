"""Exact linear algebra over Q and GF(p), and Z-module structure.

Matrices act on column vectors: a k x n matrix is a map F^n -> F^k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Sequence

from . import kernels
from .abgroup import (
    classify,
    hermite_normal_form,
    hom_kernel_image,
    matmul,
    smith_normal_form,
    solve_integer,
    transpose,
    _inverse_unimodular,
)
from .errors import DimensionMismatch, NoSection, NotExact, NotIndependent
from .ringpoly import Q, RingSpec, Z


def _require_field(field: RingSpec):
    if not field.is_field:
        raise ValueError(f"{field} is not a field")


def rref(field: RingSpec, rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form and pivot columns, exactly."""
    _require_field(field)
    if field.kind == "gf":
        return kernels.rref_mod_p([list(r) for r in rows], ncols, field.modulus)
    M = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(field: RingSpec, rows, ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


@dataclass(frozen=True)
class VectorList:
    field: RingSpec
    dim: int
    vectors: tuple

    def __init__(self, field: RingSpec, dim: int, vectors=()):
        _require_field(field)
        vecs = tuple(tuple(field(x) for x in v) for v in vectors)
        for v in vecs:
            if len(v) != dim:
                raise DimensionMismatch(f"vector of length {len(v)} in dimension {dim}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vectors", vecs)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def with_vectors(self, vectors) -> VectorList:
        return VectorList(self.field, self.dim, vectors)


def is_independent(v: VectorList) -> bool:
    return rank(v.field, v.vectors, v.dim) == len(v.vectors)


def span_member(v: VectorList, w) -> bool:
    if len(w) != v.dim:
        raise DimensionMismatch(f"vector of length {len(w)} in dimension {v.dim}")
    w = tuple(v.field(x) for x in w)
    return rank(v.field, v.vectors + (w,), v.dim) == rank(v.field, v.vectors, v.dim)


def sieve_basis(v: VectorList) -> VectorList:
    """Drop, in order, every vector already in the span of those kept."""
    kept = []
    for w in v.vectors:
        if not span_member(v.with_vectors(kept), w):
            kept.append(w)
    return v.with_vectors(kept)


def unit_vector(field: RingSpec, dim: int, i: int) -> tuple:
    return tuple(field(int(j == i)) for j in range(dim))


def extend_to_basis(v: VectorList) -> VectorList:
    """Append e_1, ..., e_n in order, keeping each that stays independent."""
    if not is_independent(v):
        raise NotIndependent("input vectors are linearly dependent")
    out = list(v.vectors)
    for i in range(v.dim):
        if len(out) == v.dim:
            break
        e = unit_vector(v.field, v.dim, i)
        if not span_member(v.with_vectors(out), e):
            out.append(e)
    return v.with_vectors(out)


@dataclass(frozen=True)
class LinearMap:
    field: RingSpec
    matrix: tuple
    source_dim: int

    def __init__(self, field: RingSpec, matrix, source_dim: int = None):
        _require_field(field)
        rows = tuple(tuple(field(x) for x in r) for r in matrix)
        n = len(rows[0]) if rows else (source_dim or 0)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix is not rectangular")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "source_dim", n)

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    def __call__(self, x):
        F = self.field
        out = []
        for row in self.matrix:
            acc = F.zero
            for a, b in zip(row, x):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)


def kernel_basis(T: LinearMap) -> VectorList:
    F, n = T.field, T.source_dim
    R, pivots = rref(F, T.matrix, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [F.zero] * n
        vec[fc] = F.one
        for row, pc in zip(R, pivots):
            vec[pc] = F.neg(row[fc])
        basis.append(vec)
    return VectorList(F, n, basis)


def rank_nullity(T: LinearMap):
    """(kernel basis, image basis) with |ker| + |im| = source dimension.

    A kernel basis is extended to a basis of the source; the images of the
    added vectors form the image basis.
    """
    ker = kernel_basis(T)
    full = extend_to_basis(ker)
    image = VectorList(T.field, T.target_dim, [T(w) for w in full.vectors[len(ker):]])
    return ker, image


# Z-modules

def stacked_basis(gens: Sequence[Sequence[int]], n: int):
    """Basis x_1..x_n of Z^n and d_1 | ... | d_r with {d_i x_i} spanning <gens>."""
    snf = smith_normal_form(gens, n)
    basis = _inverse_unimodular(snf.V) if n else []
    multipliers = tuple(d for d in snf.diag if d)
    return basis, multipliers


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], n: int) -> bool:
    return hermite_normal_form(a, n) == hermite_normal_form(b, n)


def is_projective_zmodule(A: Sequence[Sequence[int]], cols: int = None) -> bool:
    """Over Z a finitely generated module is projective iff it is free."""
    return not classify(A, cols).torsion


@dataclass(frozen=True)
class SES:
    """0 -> A1 --f--> B --g--> A2 -> 0 between free modules over ``base``.

    ``f`` is m x k, ``g`` is l x m.  Over Z, ``relations`` (rows in Z^l) may
    present A2 as a quotient Z^l / <relations>; over a field it must be empty.
    """

    base: RingSpec
    f: tuple
    g: tuple
    k: int
    m: int
    l: int
    relations: tuple = ()

    def __init__(self, base, f, g, k=None, m=None, l=None, relations=()):
        f = tuple(tuple(r) for r in f)
        g = tuple(tuple(r) for r in g)
        m = len(f) if m is None else m
        k = (len(f[0]) if f else 0) if k is None else k
        l = len(g) if l is None else l
        if len(f) != m or any(len(r) != k for r in f):
            raise DimensionMismatch("f must be m x k")
        if len(g) != l or any(len(r) != m for r in g):
            raise DimensionMismatch("g must be l x m")
        relations = tuple(tuple(r) for r in relations)
        if relations and base != Z:
            raise ValueError("relations are only meaningful over Z")
        if any(len(r) != l for r in relations):
            raise DimensionMismatch("relations must live in Z^l")
        for name, val in (("base", base), ("f", f), ("g", g), ("k", k), ("m", m), ("l", l),
                          ("relations", relations)):
            object.__setattr__(self, name, val)


@dataclass(frozen=True)
class Splitting:
    section: list
    retraction: list
    decomposition_verified: bool


def _mat(rows):
    return [list(r) for r in rows]


def _in_relations(ses: SES, vec) -> bool:
    """Whether a vector of Z^l lies in the relation lattice."""
    if not any(vec):
        return True
    if not ses.relations:
        return False
    return solve_integer(transpose(_mat(ses.relations), ses.l), list(vec), len(ses.relations)) is not None


def _field_solve(F: RingSpec, A, b, ncols):
    """A particular solution of A x = b over a field, or None."""
    aug = [list(r) + [bb] for r, bb in zip(A, b)]
    R, pivots = rref(F, aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = F(row[ncols]) if F.kind == "Q" else row[ncols]
    return x


def check_exact(ses: SES):
    """Raise :class:`NotExact` unless 0 -> A1 -> B -> A2 -> 0 is exact."""
    f, g, k, m, l = _mat(ses.f), _mat(ses.g), ses.k, ses.m, ses.l
    gf = matmul(g, f) if g and f else [[0] * k for _ in range(l)]
    if ses.base != Z:
        F = ses.base
        if any(F(x) != F.zero for row in gf for x in row):
            raise NotExact("g . f is not zero")
        rf, rg = rank(F, transpose(f, k), m), rank(F, g, m)
        if rf != k:
            raise NotExact("f is not injective")
        if rg != l:
            raise NotExact("g is not surjective")
        if rf + rg != m:
            raise NotExact("im f differs from ker g (rank defect)")
        return
    for c in range(k):
        if not _in_relations(ses, [gf[i][c] for i in range(l)]):
            raise NotExact("g . f is not zero")
    if rank(Q, transpose(f, k), m) != k:
        raise NotExact("f is not injective")
    cover = transpose(g, m) + _mat(ses.relations)
    if classify(cover, l) != classify([], 0):
        raise NotExact("g is not surjective")
    # ker of B -> A2: b with g b in the relation lattice
    t = len(ses.relations)
    joint = [list(g[i]) + [-r[i] for r in ses.relations] for i in range(l)]
    kern = hom_kernel_image(joint, m + t).kernel_basis
    ker_g = [v[:m] for v in kern]
    if not same_lattice(ker_g, transpose(f, k), m):
        raise NotExact("im f differs from ker g")


def split_section(ses: SES) -> Splitting:
    """A section h with g h = 1, its retraction k with k f = 1, and a check
    that (a1, a2) -> f a1 + h a2 is a bijection A1 + A2 -> B.

    Over Z the section is found by integer linear solving; raises
    :class:`NoSection` when none exists.
    """
    check_exact(ses)
    f, g, k, m, l = _mat(ses.f), _mat(ses.g), ses.k, ses.m, ses.l
    if ses.base != Z:
        F = ses.base
        cols = []
        for c in range(l):
            h = _field_solve(F, g, unit_vector(F, l, c), m)
            if h is None:
                raise NotExact("g is not surjective")
            cols.append(h)
        H = transpose(cols, m) if cols else [[] for _ in range(m)]
        K = _retraction(F, f, g, H, k, m, l)
        return Splitting(H, K, _verify_decomposition_field(F, f, g, H, K, k, m, l))
    H = _integer_section(ses)
    if H is None:
        raise NoSection("no homomorphism h with g h = 1 exists")
    K = _retraction(Z, f, g, H, k, m, l)
    return Splitting(H, K, _verify_decomposition_z(ses, H, K))


def _integer_section(ses: SES):
    """Solve g H = I (mod relations) with H killing the relations."""
    g, m, l = _mat(ses.g), ses.m, ses.l
    R = _mat(ses.relations)
    t = len(R)
    # unknowns: H[i][c] at i*l + c, then X[s][c] at m*l + s*l + c
    nun = m * l + t * l
    eqs, rhs = [], []
    for a in range(l):
        for c in range(l):
            row = [0] * nun
            for i in range(m):
                row[i * l + c] += g[a][i]
            for s in range(t):
                row[m * l + s * l + c] -= R[s][a]
            eqs.append(row)
            rhs.append(int(a == c))
    for i in range(m):
        for s in range(t):
            row = [0] * nun
            for c in range(l):
                row[i * l + c] += R[s][c]
            eqs.append(row)
            rhs.append(0)
    if nun == 0:
        return [[] for _ in range(m)] if not any(rhs) else None
    sol = solve_integer(eqs, rhs, nun)
    if sol is None:
        return None
    return [[sol[i * l + c] for c in range(l)] for i in range(m)]


def _retraction(F, f, g, H, k, m, l):
    """K with f K = 1 - H g (unique because f is injective)."""
    Hg = matmul(H, g) if H and g else [[0] * m for _ in range(m)]
    cols = []
    for c in range(m):
        target = [int(i == c) - Hg[i][c] for i in range(m)]
        if F == Z:
            x = solve_integer(f, target, k) if f else ([] if not any(target) else None)
        else:
            x = _field_solve(F, f, [F(v) for v in target], k) if f else ([] if not any(target) else None)
        if x is None:
            raise NotExact("1 - h g does not factor through f")
        cols.append(x)
    return transpose(cols, k) if cols and k else [[] for _ in range(k)]


def _apply(M, x, F=None):
    out = [sum(a * b for a, b in zip(row, x)) for row in M]
    return [F(v) for v in out] if F is not None else out


def _verify_decomposition_field(F, f, g, H, K, k, m, l) -> bool:
    # over a field, [f | H] being square and invertible is the bijectivity statement
    block = [list(f[i]) + list(H[i]) for i in range(m)]
    return k + l == m and rank(F, block, k + l) == m and \
        all(_apply(K, _apply(f, e, F), F) == list(e) for e in (unit_vector(F, k, i) for i in range(k)))


def _verify_decomposition_z(ses: SES, H, K, window: int = 2) -> bool:
    f, g, k, m, l = _mat(ses.f), _mat(ses.g), ses.k, ses.m, ses.l
    rng = range(-window, window + 1)
    for b in product(rng, repeat=m):
        a1, a2 = _apply(K, b), _apply(g, b)
        back = [x + y for x, y in zip(_apply(f, a1), _apply(H, a2))]
        if back != list(b):
            return False
    for a in product(rng, repeat=k + l):
        a1, a2 = list(a[:k]), list(a[k:])
        b = [x + y for x, y in zip(_apply(f, a1), _apply(H, a2))] if m else []
        if _apply(K, b) != a1:
            return False
        if not _in_relations(ses, [x - y for x, y in zip(_apply(g, b), a2)]):
            return False
    return True
