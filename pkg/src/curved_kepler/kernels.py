"""Backend selection for the tridiagonal kernels.

The compiled extension is used when it was built; otherwise the pure-Python
implementation is used. Set ``CURVED_KEPLER_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _kernels_py

if os.environ.get("CURVED_KEPLER_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

sturm_count = _impl.sturm_count
bisect_eigenvalues = _impl.bisect_eigenvalues
inverse_iteration = _impl.inverse_iteration

__all__ = ["BACKEND", "sturm_count", "bisect_eigenvalues", "inverse_iteration"]
