"""Backend selection for the modular kernels.

The compiled extension is used when it imports and the modulus fits in 31
bits; otherwise the pure-Python twin runs.  Set ``CANTORKIT_PURE_PYTHON=1``
to force the fallback.
"""

import os

from . import _pykernels

_MAX_NATIVE = 2 ** 31

_native = None
if not os.environ.get("CANTORKIT_PURE_PYTHON"):
    try:
        from . import _ckernels as _native
    except ImportError:
        _native = None

BACKEND = "cython" if _native is not None else "python"


def _pick(modulus):
    if _native is not None and 0 < modulus < _MAX_NATIVE:
        return _native
    return _pykernels


def conv_mod(a, b, n):
    return _pick(n).conv_mod(list(a), list(b), n)


def conv_mod_trunc(a, b, n, length):
    return _pick(n).conv_mod_trunc(list(a), list(b), n, length)


def rref_mod_p(rows, ncols, p):
    return _pick(p).rref_mod_p(rows, ncols, p)


def inverse_scan(a, n):
    return _pick(n).inverse_scan(a, n)


def inverse_table(n):
    return _pick(n).inverse_table(n)
