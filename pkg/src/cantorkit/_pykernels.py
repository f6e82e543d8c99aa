"""Pure-Python modular kernels; the reference the compiled twin must match."""


def conv_mod(a, b, n):
    """Coefficients of (sum a_i x^i)(sum b_j x^j) reduced mod n."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % n
    return out


def conv_mod_trunc(a, b, n, length):
    """First ``length`` coefficients of the product, mod n."""
    out = [0] * length
    for i in range(min(len(a), length)):
        x = a[i]
        if x:
            for j in range(min(len(b), length - i)):
                out[i + j] = (out[i + j] + x * b[j]) % n
    return out


def rref_mod_p(rows, ncols, p):
    """Reduced row echelon form over GF(p); returns (rows, pivot columns)."""
    M = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(M)):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def inverse_scan(a, n):
    """Least x in 1..n-1 with a*x = 1 mod n, or -1 (pigeonhole scan)."""
    acc = 0
    for x in range(1, n):
        acc += a
        if acc >= n:
            acc -= n
        if acc == 1:
            return x
    return -1


def inverse_table(n):
    """Inverse of every a in 1..n-1 by scanning, or (None, a) on the first failure."""
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
