"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  Setting ``SPECCHAIN_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("SPECCHAIN_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
mono_divides = _impl.mono_divides
mono_coprime = _impl.mono_coprime
mono_degree = _impl.mono_degree
poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_scale = _impl.poly_scale
poly_mul_term = _impl.poly_mul_term
poly_mul = _impl.poly_mul
poly_shift = _impl.poly_shift
s_poly = _impl.s_poly
normal_form = _impl.normal_form

__all__ = [
    "BACKEND",
    "mono_mul",
    "mono_div",
    "mono_lcm",
    "mono_divides",
    "mono_coprime",
    "mono_degree",
    "poly_add",
    "poly_sub",
    "poly_neg",
    "poly_scale",
    "poly_mul_term",
    "poly_mul",
    "poly_shift",
    "s_poly",
    "normal_form",
]
