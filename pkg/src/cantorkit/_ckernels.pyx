# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels.  Moduli must be below 2**31 so that products fit
in a signed 64-bit accumulator; the dispatcher in ``kernels`` enforces this."""

from libc.stdlib cimport malloc, free


def conv_mod(list a, list b, long long n):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef long long *out = <long long *> malloc((la + lb - 1) * sizeof(long long))
    cdef long long *bb = <long long *> malloc(lb * sizeof(long long))
    cdef long long x
    try:
        for i in range(la + lb - 1):
            out[i] = 0
        for j in range(lb):
            bb[j] = (<long long> b[j]) % n
            if bb[j] < 0:
                bb[j] += n
        for i in range(la):
            x = (<long long> a[i]) % n
            if x < 0:
                x += n
            if x:
                for j in range(lb):
                    out[i + j] = (out[i + j] + x * bb[j]) % n
        return [out[i] for i in range(la + lb - 1)]
    finally:
        free(out)
        free(bb)


def conv_mod_trunc(list a, list b, long long n, Py_ssize_t length):
    cdef Py_ssize_t la = min(len(a), length), lb = min(len(b), length), i, j
    cdef long long *out = <long long *> malloc((length if length > 0 else 1) * sizeof(long long))
    cdef long long *bb = <long long *> malloc((lb if lb > 0 else 1) * sizeof(long long))
    cdef long long x
    try:
        for i in range(length):
            out[i] = 0
        for j in range(lb):
            bb[j] = (<long long> b[j]) % n
            if bb[j] < 0:
                bb[j] += n
        for i in range(la):
            x = (<long long> a[i]) % n
            if x < 0:
                x += n
            if x:
                for j in range(min(lb, length - i)):
                    out[i + j] = (out[i + j] + x * bb[j]) % n
        return [out[i] for i in range(length)]
    finally:
        free(out)
        free(bb)


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_mod_p(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t m = len(rows), i, j, c, r = 0, piv
    cdef long long *M = <long long *> malloc((m * ncols if m * ncols > 0 else 1) * sizeof(long long))
    cdef long long inv, f, v
    pivots = []
    try:
        for i in range(m):
            row = rows[i]
            for j in range(ncols):
                v = (<long long> row[j]) % p
                M[i * ncols + j] = v + p if v < 0 else v
        for c in range(ncols):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if M[i * ncols + c]:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    v = M[r * ncols + j]
                    M[r * ncols + j] = M[piv * ncols + j]
                    M[piv * ncols + j] = v
            inv = _inv_mod(M[r * ncols + c], p)
            for j in range(ncols):
                M[r * ncols + j] = (M[r * ncols + j] * inv) % p
            for i in range(m):
                f = M[i * ncols + c]
                if i != r and f:
                    for j in range(ncols):
                        M[i * ncols + j] = (M[i * ncols + j] - f * M[r * ncols + j]) % p
                        if M[i * ncols + j] < 0:
                            M[i * ncols + j] += p
            pivots.append(c)
            r += 1
        return [[M[i * ncols + j] for j in range(ncols)] for i in range(m)], pivots
    finally:
        free(M)


def inverse_scan(long long a, long long n):
    cdef long long acc = 0, x
    a = a % n
    for x in range(1, n):
        acc += a
        if acc >= n:
            acc -= n
        if acc == 1:
            return x
    return -1


def inverse_table(long long n):
    cdef long long a, x
    inv = [0] * n
    for a in range(1, n):
        if inv[a]:
            continue
        x = inverse_scan(a, n)
        if x < 0:
            return None, a
        inv[a] = x
        inv[x] = a
    return inv, 0
