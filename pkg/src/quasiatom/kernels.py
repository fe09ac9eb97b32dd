"""Numerical kernel backend, chosen once at import.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same functions is loaded.  Setting ``QUASIATOM_PURE_PYTHON=1``
forces the fallback.
"""
import os

if os.environ.get("QUASIATOM_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as backend
else:
    try:
        from . import _kernels as backend
    except ImportError:
        from . import _kernels_py as backend

from . import _kernels_py as python_backend

BACKEND = backend.BACKEND


def compiled_backend():
    """The compiled module, or None when the extension is not built."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels
