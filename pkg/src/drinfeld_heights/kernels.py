"""Backend selection for the dense F_q[T] kernels.

The compiled extension is used when it was built; setting the environment
variable ``DRINFELD_HEIGHTS_PURE=1`` forces the pure-Python fallback.
"""

import os

if os.environ.get("DRINFELD_HEIGHTS_PURE", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
make_tables = _impl.make_tables
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul = _impl.poly_mul
poly_divmod = _impl.poly_divmod
poly_rem = _impl.poly_rem
poly_monic = _impl.poly_monic
poly_gcd = _impl.poly_gcd

__all__ = [
    "BACKEND", "make_tables", "poly_add", "poly_sub", "poly_neg", "poly_scale",
    "poly_mul", "poly_divmod", "poly_rem", "poly_monic", "poly_gcd",
]
