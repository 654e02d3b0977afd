"""Select the membership kernel at import time.

The compiled kernel is used when its extension module built; otherwise
the pure-Python one.  Setting FIBSEMI_PURE=1 forces the fallback, which
is how the two are benchmarked against each other.
"""

from __future__ import annotations

import os

if os.environ.get("FIBSEMI_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernel_py as _impl  # type: ignore[no-redef]

IMPLEMENTATION: str = _impl.IMPLEMENTATION
membership_bits = _impl.membership_bits
apery_minima = _impl.apery_minima
