"""Select the kernel implementation at import.

The compiled ``_kernel`` extension is used when importable.  Setting
``PLACTIC_PURE_PYTHON=1`` forces the pure-Python kernel.
"""

import os

if os.environ.get("PLACTIC_PURE_PYTHON"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel as kernel  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        from . import _kernel_py as kernel

BACKEND = kernel.NAME

__all__ = ["kernel", "BACKEND"]
