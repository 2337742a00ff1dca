"""Select the compiled kernels when built, else the pure-Python ones.

Set ``VERLINDE_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("VERLINDE_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels

__all__ = ["kernels", "BACKEND"]
