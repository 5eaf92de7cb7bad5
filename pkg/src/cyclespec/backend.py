"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure-Python
mirror takes over. CYCLESPEC_PURE=1 forces the fallback, which is how the
benchmark and the equivalence tests pin each side.
"""

from __future__ import annotations

import os

if os.environ.get("CYCLESPEC_PURE") == "1":
    from . import _pykernels as kernels

    BACKEND = "pure"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as kernels  # type: ignore[no-redef]

        BACKEND = "pure"


def backend_name() -> str:
    return BACKEND
