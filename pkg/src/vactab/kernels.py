"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module. Set ``VACTAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if not os.environ.get("VACTAB_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

PIN_NONE = _pykernels.PIN_NONE
PIN_MAX = _pykernels.PIN_MAX
PIN_MIN = _pykernels.PIN_MIN

row_insert = _impl.row_insert
row_uninsert = _impl.row_uninsert
jdt_delete = _impl.jdt_delete
count_constrained = _impl.count_constrained
block_count_histogram = _impl.block_count_histogram
restricted_growth_strings = _impl.restricted_growth_strings


def backends():
    """Map backend name to module for every importable implementation."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
