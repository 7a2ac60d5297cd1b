"""Select the kernel implementation at import time.

``conjulin._ckernels`` (Cython) is used when it was built; otherwise the
numpy fallback in ``conjulin._pykernels``. Set ``CONJULIN_PURE_PYTHON=1``
to force the fallback.
"""
import os

if os.environ.get("CONJULIN_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as kernels

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
