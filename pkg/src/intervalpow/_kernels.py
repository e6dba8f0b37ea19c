"""Select the sampling backend at import time."""

import os

from . import _pykernel

BACKEND = "python"

if not os.environ.get("INTERVALPOW_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
else:
    _impl = _pykernel

odd_fractions = _impl.odd_fractions
power_samples = _impl.power_samples


def backends():
    """Every importable backend, keyed by name."""
    found = {"python": _pykernel}
    try:
        from . import _ckernel

        found["cython"] = _ckernel
    except ImportError:
        pass
    return found
