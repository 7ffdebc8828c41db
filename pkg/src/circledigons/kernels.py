"""Kernel backend selection.

The compiled Cython module is used when it was built; otherwise the pure-Python
twin. Set ``CIRCLEDIGONS_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None
else:
    BACKENDS["cython"] = _compiled

if _compiled is not None and not os.environ.get("CIRCLEDIGONS_PURE"):
    active = _compiled
    ACTIVE_NAME = "cython"
else:
    active = _kernels_py
    ACTIVE_NAME = "python"


def get(name=None):
    """Kernel module by name ('cython' or 'python'); the active one by default."""
    if name is None:
        return active
    try:
        return BACKENDS[name]
    except KeyError:
        raise LookupError(f"kernel backend {name!r} is not available") from None
