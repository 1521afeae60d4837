"""Backend selection for the hot linear-algebra kernels.

The compiled extension is preferred when importable; setting the
environment variable ``SKEWREC_PURE_PYTHON=1`` forces the pure backend.
"""

import os

from skewrec import _purekernel

if os.environ.get("SKEWREC_PURE_PYTHON"):
    _impl = _purekernel
    BACKEND = "pure"
else:
    try:
        from skewrec import _fastkernel as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _purekernel
        BACKEND = "pure"


def backend_name():
    return BACKEND


def rref(rows, ncols, p):
    return _impl.rref(rows, ncols, p)


def matmul(a, b, p):
    return _impl.matmul(a, b, p)
