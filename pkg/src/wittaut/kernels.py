"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` twin.  Setting ``WITTAUT_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("WITTAUT_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _active
    BACKEND = "cython"
except ImportError:
    _active = _pykernels
    BACKEND = "python"

scan_unimodular = _active.scan_unimodular
det_small = _active.det_small

# int64 safety bound for the compiled scan: |entries| * |coef| and Bareiss
# intermediates must stay far from overflow.
C_SAFE_ENTRY = 1 << 15


def backend(name=None):
    """Return the kernel module for ``name`` ("cython"/"python") or the active one."""
    if name is None:
        return _active
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(name)
