"""Backend selection for the inner loops.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``HECKEMAC_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementations are used.  Both expose the same functions.
"""

import os

from . import _pykernels

if os.environ.get("HECKEMAC_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

poly_mul_terms = _impl.poly_mul_terms
matmul_mod = _impl.matmul_mod
inverse_mod = _impl.inverse_mod
rank_mod = _impl.rank_mod
bruhat_word = _impl.bruhat_word
flag_canonical = _impl.flag_canonical

__all__ = [
    "BACKEND",
    "poly_mul_terms",
    "matmul_mod",
    "inverse_mod",
    "rank_mod",
    "bruhat_word",
    "flag_canonical",
]
