"""Kernel selection: compiled extension when built, pure Python otherwise.

Set LSS_PURE_KERNEL=1 to force the pure-Python twin (used by the
benchmark and the equivalence tests).
"""

from __future__ import annotations

import os

from . import _purekernel

if os.environ.get("LSS_PURE_KERNEL"):
    obstruction_free = _purekernel.obstruction_free
    BACKEND = "pure"
else:
    try:
        from . import _fastkernel

        obstruction_free = _fastkernel.obstruction_free
        BACKEND = "compiled"
    except ImportError:
        obstruction_free = _purekernel.obstruction_free
        BACKEND = "pure"
