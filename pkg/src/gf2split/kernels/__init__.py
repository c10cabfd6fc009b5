"""Hot loops of the package, with a numba and a pure-numpy implementation.

The numba path is used by default.  Set ``GF2SPLIT_DISABLE_JIT=1`` before
import to run the numpy path instead (no compilation, much slower on
large batches).  Both modules stay importable so they can be compared.
"""

import os

from . import _numpy

NAMES = (
    "gf_mul",
    "gf_inv",
    "matmul",
    "mat_scale",
    "rref",
    "local_minpoly",
    "poly_mul",
    "poly_divrem",
    "poly_eval_all",
    "poly_frobenius_x",
    "poly_apply",
    "hessenberg_charpoly",
    "f2_search",
    "square_zero_scan",
)


def _jit_disabled():
    return os.environ.get("GF2SPLIT_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}


def load_backend(name):
    """Return the kernel module for ``"numba"`` or ``"numpy"``."""
    if name == "numpy":
        return _numpy
    if name == "numba":
        from . import _jit

        return _jit
    raise ValueError(f"unknown backend {name!r}")


BACKEND = "numpy" if _jit_disabled() else "numba"
try:
    _impl = load_backend(BACKEND)
except ImportError:  # numba missing
    BACKEND = "numpy"
    _impl = _numpy

globals().update({name: getattr(_impl, name) for name in NAMES})

__all__ = ["BACKEND", "NAMES", "load_backend", *NAMES]
