"""Kernel selection: the compiled extension when importable, otherwise the Python fallback."""

import os

from . import _fallback

BACKEND = "python"
run_table = _fallback.run_table
batch_member = _fallback.batch_member

if os.environ.get("UL_PURE_PYTHON") != "1":
    try:
        from . import _kernels

        run_table = _kernels.run_table
        batch_member = _kernels.batch_member
        BACKEND = "cython"
    except ImportError:
        pass
