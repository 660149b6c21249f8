"""Kernel backend selection.

The compiled extension is used when it imports and the environment variable
``BINOMAT_PURE_PYTHON`` is unset or "0"; otherwise the pure-Python kernels are
used. Only moduli below 2**31 go to the compiled path (products must fit in
64 bits).
"""

from __future__ import annotations

import os

from . import _purekernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

C_MODULUS_LIMIT = 2**31

_force_pure = os.environ.get("BINOMAT_PURE_PYTHON", "0") not in ("", "0")
BACKEND = "python" if (_force_pure or _compiled is None) else "cython"


def compiled_available() -> bool:
    return _compiled is not None


def _impl(p: int, backend: str | None):
    backend = backend or BACKEND
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        if p < C_MODULUS_LIMIT:
            return _compiled
    return _purekernels


def matmul_mod(a, b, p: int, backend: str | None = None):
    return _impl(p, backend).matmul_mod(a, b, p)


def matpow_mod(a, e: int, p: int, backend: str | None = None):
    return _impl(p, backend).matpow_mod(a, e, p)


def berkowitz_mod(a, p: int, backend: str | None = None):
    return _impl(p, backend).berkowitz_mod(a, p)


berkowitz = _purekernels.berkowitz
