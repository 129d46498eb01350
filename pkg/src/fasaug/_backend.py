"""Kernel backend selection.

The compiled extension is used when importable; set ``FASAUG_PURE_PYTHON=1``
to force the numpy fallback.
"""
import os

from . import _pykernels

if os.environ.get("FASAUG_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = kernels.NAME


def available_backends():
    """Every importable kernel module, keyed by name."""
    found = {"numpy": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
